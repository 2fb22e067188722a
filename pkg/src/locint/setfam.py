"""Families of subsets of a finite ground set.

Points are indices into ``ground``; a subset is a bitmask over points.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Hashable, Iterable, Optional, Sequence

from .lattice import bits
from .verdict import LocIntError, Verdict

__all__ = [
    "SetFamily",
    "NotASetLattice",
    "SeparationProfile",
    "LeaderRelation",
    "separation_profile",
    "is_set_lattice",
    "is_loc_setfamily",
    "ternary",
    "leader_preorder",
    "representative_family",
    "representative_candidates",
]


class NotASetLattice(LocIntError):
    pass


@dataclass(frozen=True)
class SetFamily:
    ground: tuple[str, ...]
    members: tuple[int, ...]

    def __post_init__(self):
        if len(set(self.members)) != len(self.members):
            raise ValueError("members must be pairwise distinct")
        if len(set(self.ground)) != len(self.ground):
            raise ValueError("ground labels must be distinct")
        full = (1 << len(self.ground)) - 1
        if any(m & ~full for m in self.members):
            raise ValueError("member mentions a point outside the ground set")

    @classmethod
    def from_masks(cls, ground: Sequence[Hashable], members: Iterable[int]) -> "SetFamily":
        return cls(tuple(str(g) for g in ground), tuple(members))

    @classmethod
    def from_labels(cls, ground: Sequence[Hashable], members: Iterable[Iterable[Hashable]]) -> "SetFamily":
        ground = tuple(str(g) for g in ground)
        idx = {g: i for i, g in enumerate(ground)}
        masks = []
        for mem in members:
            m = 0
            for p in mem:
                try:
                    m |= 1 << idx[str(p)]
                except KeyError:
                    raise ValueError(f"member mentions unknown point {p!r}") from None
            masks.append(m)
        return cls(ground, tuple(masks))

    @property
    def n(self) -> int:
        return len(self.ground)

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def labels(self, mask: int) -> list[str]:
        return [self.ground[i] for i in bits(mask)]

    def to_json(self) -> dict:
        return {"ground": list(self.ground), "members": [self.labels(m) for m in self.members]}

    @cached_property
    def containing(self) -> tuple[int, ...]:
        """``containing[x]``: mask over member indices of the members holding x."""
        return tuple(
            sum(1 << k for k, m in enumerate(self.members) if m >> x & 1)
            for x in range(self.n)
        )

    def between(self, a: int, b: int, c: int) -> bool:
        """(a b c): every member holding a and c holds b."""
        cont = self.containing
        return not (cont[a] & cont[c] & ~cont[b])

    def leads(self, x: int, y: int) -> bool:
        """x L y: every member holding x holds y."""
        cont = self.containing
        return not (cont[x] & ~cont[y])

    # lattice structure under inclusion

    def _least_above(self, mask: int) -> Optional[int]:
        ups = [m for m in self.members if m & mask == mask]
        for c in ups:
            if all(c & u == c for u in ups):
                return c
        return None

    def _greatest_below(self, mask: int) -> Optional[int]:
        downs = [m for m in self.members if m & mask == m]
        for c in downs:
            if all(c & d == d for d in downs):
                return c
        return None

    @cached_property
    def _tables(self) -> tuple[dict, dict]:
        join, meet = {}, {}
        for i, a in enumerate(self.members):
            for b in self.members[i:]:
                j = self._least_above(a | b)
                m = self._greatest_below(a & b)
                if j is None or m is None:
                    raise NotASetLattice(
                        f"{self.labels(a)} and {self.labels(b)} lack a "
                        f"{'least upper' if j is None else 'greatest lower'} bound in the family"
                    )
                join[a, b] = join[b, a] = j
                meet[a, b] = meet[b, a] = m
        return join, meet

    def join(self, a: int, b: int) -> int:
        return self._tables[0][a, b]

    def meet(self, a: int, b: int) -> int:
        return self._tables[1][a, b]


def is_set_lattice(F: SetFamily) -> Verdict:
    try:
        F._tables
    except NotASetLattice as exc:
        return Verdict.failed("lattice", str(exc))
    return Verdict.passed()


def _incomparable(a: int, b: int) -> bool:
    return a & b != a and a & b != b


def is_loc_setfamily(F: SetFamily) -> Verdict:
    """Check the four loc conditions; raises NotASetLattice first if needed.

    Witnesses are tuples of member masks, reported condition by condition in
    lexicographic order of member indices.
    """
    F._tables
    ms = F.members
    for a in ms:
        for b in ms:
            if F.meet(a, b) != a & b:
                return Verdict.failed("condition 1", (a, b))
    for a in ms:
        for b in ms:
            if a & b and F.join(a, b) != a | b:
                return Verdict.failed("condition 2", (a, b))
    for a in ms:
        for b in ms:
            for c in ms:
                if not (a & ~F.join(b, c) == 0 or b & ~F.join(a, c) == 0 or c & ~F.join(a, b) == 0):
                    return Verdict.failed("condition 3", (a, b, c))
    for a in ms:
        for b in ms:
            for c in ms:
                if (_incomparable(a, b) and _incomparable(a, c) and _incomparable(b, c)
                        and b & ~F.join(a, c) == 0
                        and F.join(a, b) & F.join(c, b) != b):
                    return Verdict.failed("condition 4", (a, b, c))
    return Verdict.passed()


def ternary(F: SetFamily, a: int, b: int, c: int) -> bool:
    return F.between(a, b, c)


@dataclass(frozen=True)
class SeparationProfile:
    separates: Verdict
    completely: Verdict
    totally: Verdict
    well: Verdict


def _separates(F: SetFamily) -> Verdict:
    for x in range(F.n):
        for y in range(x + 1, F.n):
            if F.leads(x, y) and F.leads(y, x):
                return Verdict.failed("separates", (x, y))
    return Verdict.passed()


def completely_separated(F: SetFamily, x: int, y: int) -> bool:
    return not F.leads(x, y) and not F.leads(y, x)


def totally_separated(F: SetFamily, x: int, y: int) -> bool:
    xs = [m for m in F.members if m >> x & 1]
    ys = [m for m in F.members if m >> y & 1]
    return any(not a & b for a in xs for b in ys)


def separation_profile(F: SetFamily) -> SeparationProfile:
    sep = _separates(F)
    comp = tot = Verdict.passed()
    for x in range(F.n):
        for y in range(x + 1, F.n):
            if comp and not completely_separated(F, x, y):
                comp = Verdict.failed("completely", (x, y))
            if tot and not totally_separated(F, x, y):
                tot = Verdict.failed("totally", (x, y))
    well = sep
    if well:
        for k, m in enumerate(F.members):
            for x in range(F.n):
                if m >> x & 1:
                    continue
                if not any(n >> x & 1 and n & m != n for n in F.members):
                    well = Verdict.failed("well", (m, x))
                    break
            if not well:
                break
    return SeparationProfile(sep, comp, tot, well)


@dataclass(frozen=True)
class LeaderRelation:
    """``leads[x]``: mask of points y with x L y."""

    leads: tuple[int, ...]

    def holds(self, x: int, y: int) -> bool:
        return bool(self.leads[x] >> y & 1)

    def independent(self, x: int, y: int) -> bool:
        return not self.holds(x, y) and not self.holds(y, x)

    def is_antisymmetric(self) -> bool:
        n = len(self.leads)
        return all(not (self.holds(x, y) and self.holds(y, x))
                   for x in range(n) for y in range(x + 1, n))

    def maximal_independent(self, points: Optional[Iterable[int]] = None,
                            seed: Sequence[int] = ()) -> list[int]:
        """Greedy maximal independent subset, scanning points by index."""
        pts = sorted(range(len(self.leads)) if points is None else points)
        chosen = list(seed)
        for p in pts:
            if p in chosen:
                continue
            if all(self.independent(p, q) for q in chosen):
                chosen.append(p)
        return sorted(chosen)


def leader_preorder(F: SetFamily) -> LeaderRelation:
    return LeaderRelation(tuple(
        sum(1 << y for y in range(F.n) if F.leads(x, y)) for x in range(F.n)
    ))


def representative_candidates(F: SetFamily, points: Sequence[int]) -> list[list[int]]:
    """For each point, the members holding it and none of the other points."""
    allmask = 0
    for p in points:
        allmask |= 1 << p
    out = []
    for p in points:
        others = allmask & ~(1 << p)
        out.append([m for m in F.members if m >> p & 1 and not m & others])
    return out


def representative_family(F: SetFamily, points: Sequence[int]) -> Optional[list[int]]:
    """Members M_i with x_i ∈ M_i and x_j ∉ M_i, preferring ⊆-minimal ones."""
    if len(set(points)) != len(points):
        raise ValueError("points must be pairwise distinct")
    chosen = []
    for cands in representative_candidates(F, points):
        if not cands:
            return None
        minimal = [c for c in cands if not any(d != c and d & c == d for d in cands)]
        chosen.append(minimal[0])
    return chosen
