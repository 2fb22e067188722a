"""Brute-force ground truth: order search, interval-embedding search,
small-lattice enumeration and random generators of test inputs."""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional

from .lattice import FiniteLattice, NotALattice, _from_up, bits
from .ordering import LinearOrder, is_consistent
from .represent import IntervalRepresentation
from .setfam import SetFamily, _separates, is_loc_setfamily
from .verdict import LocIntError

__all__ = [
    "SearchBudget",
    "BudgetExceeded",
    "brute_force_order",
    "brute_force_representation",
    "enumerate_lattices",
    "canonical_form",
    "sample_interval_sublattice",
    "random_loc_families",
    "chain_intervals",
]

MAX_ENUM_ELEMENTS = 7


class BudgetExceeded(LocIntError):
    pass


@dataclass(frozen=True)
class SearchBudget:
    max_points: int = 8
    max_elements: int = 7
    seed: int = 0
    # searches run serially; the flag is accepted so callers can record intent
    parallel: bool = False


DEFAULT_BUDGET = SearchBudget()


def brute_force_order(F: SetFamily, budget: SearchBudget = DEFAULT_BUDGET) -> Optional[LinearOrder]:
    """First consistent order in lexicographic permutation order."""
    if F.n > budget.max_points:
        raise BudgetExceeded(f"{F.n} points exceed the bound {budget.max_points}")
    for perm in itertools.permutations(range(F.n)):
        if is_consistent(F, perm)[0]:
            return LinearOrder(perm)
    return None


def chain_intervals(n: int) -> list[int]:
    """∅ followed by every segment [s, e] of an n-chain, ordered by (s, e)."""
    out = [0]
    for s in range(n):
        for e in range(s, n):
            out.append(((1 << (e + 1)) - 1) & ~((1 << s) - 1))
    return out


def _hull(mask: int) -> int:
    if not mask:
        return 0
    lo = (mask & -mask).bit_length() - 1
    hi = mask.bit_length() - 1
    return ((1 << (hi + 1)) - 1) & ~((1 << lo) - 1)


def brute_force_representation(L: FiniteLattice, n: int, faithful: bool,
                               budget: SearchBudget = DEFAULT_BUDGET) -> Optional[IntervalRepresentation]:
    """First assignment of elements to intervals of an n-chain meeting the laws.

    Elements are assigned in a linear extension; every law whose arguments
    are all assigned is checked as soon as the last of them is.
    """
    if n > budget.max_points:
        raise BudgetExceeded(f"chain of {n} points exceeds the bound {budget.max_points}")
    if L.n > max(budget.max_elements, MAX_ENUM_ELEMENTS):
        raise BudgetExceeded(f"lattice of {L.n} elements exceeds the bound {budget.max_elements}")
    order = sorted(range(L.n), key=lambda x: (bin(L.down[x]).count("1"), x))
    cands = chain_intervals(n)
    f: dict[int, int] = {}

    def ok(x: int) -> bool:
        fx = f[x]
        for y, fy in f.items():
            if L.leq(x, y) != (fx & fy == fx) or L.leq(y, x) != (fx & fy == fy):
                return False
        for a in f:
            for b in f:
                m = L.meet(a, b)
                if x in (a, b, m) and m in f and f[m] != f[a] & f[b]:
                    return False
                if faithful:
                    j = L.join(a, b)
                    if x in (a, b, j) and j in f and f[j] != _hull(f[a] | f[b]):
                        return False
        return True

    def rec(i: int) -> bool:
        if i == len(order):
            return True
        x = order[i]
        for c in ([0] if x == L.bottom else cands):
            f[x] = c
            if ok(x) and rec(i + 1):
                return True
            del f[x]
        return False

    if not rec(0):
        return None
    return IntervalRepresentation(LinearOrder(tuple(range(n))), tuple(f[x] for x in range(L.n)),
                                  faithful, tuple(str(p + 1) for p in range(n)))


# lattice enumeration


def _labels(n: int) -> list[str]:
    if n == 1:
        return ["0"]
    return ["0"] + [chr(ord("a") + i) for i in range(n - 2)] + ["1"]


def _up_from_middle(n: int, rel: dict[tuple[int, int], bool]) -> tuple[int, ...]:
    full = (1 << n) - 1
    up = [full] + [0] * (n - 1)
    top = n - 1
    for i in range(1, n - 1):
        m = (1 << i) | (1 << top)
        for j in range(1, n - 1):
            if rel.get((i, j)):
                m |= 1 << j
        up[i] = m
    up[top] = 1 << top
    return tuple(up)


def _middle_key(up: tuple[int, ...], perm: tuple[int, ...]) -> tuple[int, ...]:
    """Strict-order pairs of the middle elements after relabelling by ``perm``."""
    k = len(perm)
    pos = {old: new for new, old in enumerate(perm)}
    key = [0] * k
    for a in range(k):
        row = 0
        for b in range(k):
            if a != b and up[a + 1] >> (b + 1) & 1:
                row |= 1 << pos[b]
        key[pos[a]] = row
    return tuple(key)


def canonical_form(L: FiniteLattice) -> tuple:
    """Isomorphism invariant: least middle relation over relabellings fixing 0 and 1."""
    n = L.n
    if n <= 2:
        return (n,)
    top = L.top
    mids = [x for x in range(n) if x not in (L.bottom, top)]
    idx = [L.bottom] + mids + [top]
    # up relation reindexed so 0 comes first and 1 last
    pos = {old: new for new, old in enumerate(idx)}
    up = tuple(sum(1 << pos[j] for j in bits(L.up[i])) for i in idx)
    k = n - 2
    return (n,) + min(_middle_key(up, perm) for perm in itertools.permutations(range(k)))


@lru_cache(maxsize=None)
def _enumerate(n: int) -> tuple[FiniteLattice, ...]:
    labels = _labels(n)
    if n == 1:
        return (_from_up(labels, (1,)),)
    k = n - 2
    pairs = [(i, j) for i in range(1, n - 1) for j in range(i + 1, n - 1)]
    found: dict[tuple, FiniteLattice] = {}
    for choice in range(1 << len(pairs)):
        rel = {p: bool(choice >> t & 1) for t, p in enumerate(pairs)}
        # transitivity on the middle elements
        if any(rel.get((a, b)) and rel.get((b, c)) and not rel.get((a, c))
               for a, b in pairs for c in range(b + 1, n - 1)):
            continue
        up = _up_from_middle(n, rel)
        try:
            L = _from_up(labels, up)
        except NotALattice:
            continue
        key = (n,) + min(_middle_key(up, perm) for perm in itertools.permutations(range(k)))
        if key in found:
            continue
        # store the canonical relabelling itself
        perm = min(itertools.permutations(range(k)), key=lambda p: _middle_key(up, p))
        found[key] = _relabel(L, perm, labels)
    return tuple(found[key] for key in sorted(found))


def _relabel(L: FiniteLattice, perm: tuple[int, ...], labels: list[str]) -> FiniteLattice:
    n = L.n
    new_of = {0: 0, n - 1: n - 1}
    for new, old in enumerate(perm):
        new_of[old + 1] = new + 1
    up = [0] * n
    for i in range(n):
        up[new_of[i]] = sum(1 << new_of[j] for j in bits(L.up[i]))
    return _from_up(labels, tuple(up))


def enumerate_lattices(n: int) -> Iterator[FiniteLattice]:
    """Every lattice on n elements up to isomorphism, each in canonical form."""
    if not 1 <= n <= MAX_ENUM_ELEMENTS:
        raise BudgetExceeded(f"enumeration supports 1..{MAX_ENUM_ELEMENTS} elements, got {n}")
    yield from _enumerate(n)


# random generators


def sample_interval_sublattice(n: int, seed: int,
                               budget: SearchBudget = DEFAULT_BUDGET) -> tuple[FiniteLattice, IntervalRepresentation]:
    """Random family of segments of an n-chain with ∅, closed under ∩ and hull."""
    if not 1 <= n <= budget.max_points:
        raise BudgetExceeded(f"chain of {n} points outside 1..{budget.max_points}")
    rng = random.Random(seed)
    segs = chain_intervals(n)[1:]
    fam = {0} | set(rng.sample(segs, rng.randint(1, min(len(segs), n + 2))))
    grown = True
    while grown:
        grown = False
        for a, b in itertools.combinations(sorted(fam), 2):
            for c in (a & b, _hull(a | b)):
                if c not in fam:
                    fam.add(c)
                    grown = True
    members = sorted(fam, key=lambda m: (bin(m).count("1"), m))
    labels = ["∅" if m == 0 else f"[{bits(m)[0] + 1},{bits(m)[-1] + 1}]" for m in members]
    up = tuple(sum(1 << j for j, b in enumerate(members) if a & b == a) for a in members)
    L = _from_up(labels, up)
    rep = IntervalRepresentation(LinearOrder(tuple(range(n))), tuple(members), True,
                                 tuple(str(p + 1) for p in range(n)))
    return L, rep


def _intersection_closure(fam: set[int]) -> set[int]:
    grown = True
    while grown:
        grown = False
        for a, b in itertools.combinations(sorted(fam), 2):
            if a & b not in fam:
                fam.add(a & b)
                grown = True
    return fam


def _random_candidate(rng: random.Random, n: int) -> SetFamily:
    full = (1 << n) - 1
    if rng.random() < 0.6:
        # segments of a hidden random order: consistent by construction
        perm = list(range(n))
        rng.shuffle(perm)
        segs = []
        for s in range(n):
            for e in range(s, n):
                segs.append(sum(1 << perm[i] for i in range(s, e + 1)))
        picked = set(rng.sample(segs, rng.randint(1, min(len(segs), 2 * n + 2))))
    else:
        picked = {rng.randrange(1, full + 1) for _ in range(rng.randint(1, 2 * n + 2))}
    picked.add(full)
    if rng.random() < 0.5:
        picked.add(0)
    fam = _intersection_closure(picked)
    members = sorted(fam, key=lambda m: (bin(m).count("1"), m))
    return SetFamily.from_masks([str(p + 1) for p in range(n)], members)


def random_loc_families(count: int, seed: int, max_points: int = 6,
                        max_attempts: int = 100_000) -> Iterator[SetFamily]:
    """``count`` seeded random families that are loc and separate their points.

    The ground-set size is drawn first and candidates of that size are
    resampled until one qualifies, so sizes come out roughly uniform.
    """
    rng = random.Random(seed)
    for got in range(count):
        n = rng.randint(1, max_points)
        for _ in range(max_attempts):
            F = _random_candidate(rng, n)
            if _separates(F) and is_loc_setfamily(F):
                yield F
                break
        else:
            raise BudgetExceeded(f"no family on {n} points after {max_attempts} attempts ({got} found)")
