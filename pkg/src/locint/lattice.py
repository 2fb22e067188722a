"""Finite lattices given by their Hasse diagram.

Elements are addressed by index; subsets of elements are Python ints used as
bitmasks (bit ``i`` set means element ``i`` belongs to the subset).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Hashable, Iterable, NamedTuple, Optional, Sequence

from .verdict import LocIntError

__all__ = [
    "LatticeError",
    "NotALattice",
    "NoBottom",
    "CyclicCovers",
    "FiniteLattice",
    "InternalElementSet",
    "LocVerdict",
    "Accessibility",
    "build_lattice",
    "adjoin_bottom",
    "internal_elements",
    "is_loc_lattice",
    "accessibility",
    "is_interlocking",
    "bits",
]


class LatticeError(LocIntError):
    pass


class NotALattice(LatticeError):
    pass


class NoBottom(LatticeError):
    pass


class CyclicCovers(LatticeError):
    pass


def bits(mask: int) -> list[int]:
    """Indices of the set bits of ``mask`` in increasing order."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


@dataclass(frozen=True)
class FiniteLattice:
    """A finite lattice with 0.

    ``up[i]`` is the mask of all ``j`` with ``i <= j``; meets and joins are
    tabulated once at construction.
    """

    labels: tuple[str, ...]
    up: tuple[int, ...]
    meet_table: tuple[tuple[int, ...], ...]
    join_table: tuple[tuple[int, ...], ...]
    bottom: int

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def __len__(self) -> int:
        return self.n

    def leq(self, a: int, b: int) -> bool:
        return bool(self.up[a] >> b & 1)

    def meet(self, a: int, b: int) -> int:
        return self.meet_table[a][b]

    def join(self, a: int, b: int) -> int:
        return self.join_table[a][b]

    def index(self, label: Hashable) -> int:
        return self._label_index[str(label)]

    def label_set(self, mask: int) -> list[str]:
        return [self.labels[i] for i in bits(mask)]

    def mask_of(self, labels: Iterable[Hashable]) -> int:
        m = 0
        for lab in labels:
            m |= 1 << self.index(lab)
        return m

    @cached_property
    def _label_index(self) -> dict[str, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    @cached_property
    def down(self) -> tuple[int, ...]:
        return tuple(
            sum(1 << j for j in range(self.n) if self.up[j] >> i & 1)
            for i in range(self.n)
        )

    @cached_property
    def top(self) -> int:
        return self.join_all(range(self.n))

    def join_all(self, elems: Iterable[int]) -> int:
        acc = self.bottom
        for e in elems:
            acc = self.join_table[acc][e]
        return acc

    def meet_all(self, elems: Iterable[int]) -> Optional[int]:
        """Meet of a nonempty collection; ``None`` for the empty one."""
        acc = None
        for e in elems:
            acc = e if acc is None else self.meet_table[acc][e]
        return acc

    def comparable(self, a: int, b: int) -> bool:
        return self.leq(a, b) or self.leq(b, a)

    @cached_property
    def internal_masks(self) -> tuple[tuple[int, ...], ...]:
        """``internal_masks[a][b]`` is the mask of I(a, b)."""
        n, mt, jt = self.n, self.meet_table, self.join_table
        out = []
        for a in range(n):
            row = []
            for b in range(n):
                m = 0
                for x in bits(self.down[jt[a][b]]):
                    if jt[mt[a][x]][mt[b][x]] != x:
                        m |= 1 << x
                row.append(m)
            out.append(tuple(row))
        return tuple(out)

    def closed_internal_mask(self, a: int, b: int) -> int:
        return self.internal_masks[a][b] | (1 << a) | (1 << b)

    @classmethod
    def from_leq(cls, labels: Sequence[Hashable], leq: Sequence[Sequence[bool]]) -> "FiniteLattice":
        """Build from a full order matrix, computing meets and joins."""
        n = len(labels)
        up = tuple(sum(1 << j for j in range(n) if leq[i][j]) for i in range(n))
        return _from_up([str(x) for x in labels], up)

    def to_json(self) -> dict:
        return {"elements": list(self.labels), "covers": [list(c) for c in self.cover_labels()]}

    def cover_labels(self) -> list[tuple[str, str]]:
        out = []
        for a in range(self.n):
            strict_up = self.up[a] & ~(1 << a)
            for b in bits(strict_up):
                between = strict_up & self.down[b] & ~(1 << b)
                if not between:
                    out.append((self.labels[a], self.labels[b]))
        return out


def _from_up(labels: list[str], up: tuple[int, ...]) -> FiniteLattice:
    n = len(labels)
    if n == 0:
        raise NoBottom("empty poset has no least element")
    for i in range(n):
        for j in range(i + 1, n):
            if up[i] >> j & 1 and up[j] >> i & 1:
                raise CyclicCovers(f"{labels[i]} and {labels[j]} lie on a cycle")
    down = [sum(1 << j for j in range(n) if up[j] >> i & 1) for i in range(n)]
    full = (1 << n) - 1
    bottoms = [i for i in range(n) if up[i] == full]
    if not bottoms:
        raise NoBottom("no element lies below every other element")

    def least(mask: int) -> Optional[int]:
        for c in bits(mask):
            if up[c] & mask == mask:
                return c
        return None

    def greatest(mask: int) -> Optional[int]:
        for c in bits(mask):
            if down[c] & mask == mask:
                return c
        return None

    meet = [[0] * n for _ in range(n)]
    join = [[0] * n for _ in range(n)]
    for a in range(n):
        for b in range(a, n):
            j = least(up[a] & up[b])
            m = greatest(down[a] & down[b])
            if j is None:
                raise NotALattice(f"{labels[a]} and {labels[b]} have no least upper bound")
            if m is None:
                raise NotALattice(f"{labels[a]} and {labels[b]} have no greatest lower bound")
            join[a][b] = join[b][a] = j
            meet[a][b] = meet[b][a] = m
    return FiniteLattice(
        labels=tuple(labels),
        up=tuple(up),
        meet_table=tuple(map(tuple, meet)),
        join_table=tuple(map(tuple, join)),
        bottom=bottoms[0],
    )


def build_lattice(labels: Sequence[Hashable], covers: Iterable[tuple[Hashable, Hashable]]) -> FiniteLattice:
    """Close a cover relation reflexively and transitively and tabulate the lattice.

    Raises CyclicCovers, NoBottom or NotALattice.
    """
    labels = [str(x) for x in labels]
    if len(set(labels)) != len(labels):
        raise ValueError("element labels must be distinct")
    idx = {lab: i for i, lab in enumerate(labels)}
    n = len(labels)
    succ = [0] * n
    for lo, hi in covers:
        try:
            a, b = idx[str(lo)], idx[str(hi)]
        except KeyError as exc:
            raise ValueError(f"cover mentions unknown element {exc.args[0]!r}") from None
        if a == b:
            raise CyclicCovers(f"self-loop on {labels[a]}")
        succ[a] |= 1 << b
    # reflexive-transitive closure, Warshall style on bitmasks
    up = [succ[i] | (1 << i) for i in range(n)]
    for k in range(n):
        for i in range(n):
            if up[i] >> k & 1:
                up[i] |= up[k]
    return _from_up(labels, tuple(up))


def adjoin_bottom(L_labels: Sequence[Hashable], covers: Sequence[tuple[Hashable, Hashable]],
                  name: str = "⊥") -> tuple[list[str], list[tuple[str, str]]]:
    """Add a fresh least element below every minimal element of a cover relation."""
    labels = [str(x) for x in L_labels]
    while name in labels:
        name += "'"
    has_lower = {str(hi) for _, hi in covers}
    new_covers = [(name, lab) for lab in labels if lab not in has_lower]
    return [name] + labels, new_covers + [(str(a), str(b)) for a, b in covers]


class InternalElementSet(NamedTuple):
    a: int
    b: int
    internal: int
    closed: int


def internal_elements(L: FiniteLattice, a: int, b: int) -> InternalElementSet:
    """I(a, b): elements below a∨b not recovered as (a∧x)∨(b∧x)."""
    if not (0 <= a < L.n and 0 <= b < L.n):
        raise IndexError("element index out of range")
    internal = 0
    for x in range(L.n):
        if L.leq(x, L.join(a, b)) and L.join(L.meet(a, x), L.meet(b, x)) != x:
            internal |= 1 << x
    return InternalElementSet(a, b, internal, internal | (1 << a) | (1 << b))


@dataclass(frozen=True)
class LocVerdict:
    is_loc: bool
    violated_condition: Optional[int] = None
    witness: Optional[tuple[int, int, int]] = None

    def __bool__(self) -> bool:
        return self.is_loc


def is_loc_lattice(L: FiniteLattice) -> LocVerdict:
    """Check the three loc conditions over all triples in lexicographic order.

    For a triple (a, b, x): (1) one of the three is below the join of the
    other two; (2) pairwise incomparable with x below a∨b forces
    (a∨x)∧(b∨x) = x; (3) x below a∨b with a∧x, b∧x nonzero forces
    (a∧x)∨(b∧x) = x.
    """
    n, mt, jt, z = L.n, L.meet_table, L.join_table, L.bottom
    up = L.up
    for a in range(n):
        for b in range(n):
            ab = jt[a][b]
            for x in range(n):
                if not (up[a] >> jt[b][x] & 1 or up[b] >> jt[a][x] & 1 or up[x] >> ab & 1):
                    return LocVerdict(False, 1, (a, b, x))
                x_below = up[x] >> ab & 1
                if not x_below:
                    continue
                if (not L.comparable(a, b) and not L.comparable(a, x)
                        and not L.comparable(b, x)
                        and mt[jt[a][x]][jt[b][x]] != x):
                    return LocVerdict(False, 2, (a, b, x))
                ax, bx = mt[a][x], mt[b][x]
                if ax != z and bx != z and jt[ax][bx] != x:
                    return LocVerdict(False, 3, (a, b, x))
    return LocVerdict(True)


class Accessibility(NamedTuple):
    accessible_below: bool
    accessible_above: bool


def accessibility(L: FiniteLattice, a: int, *, empty_witnesses: bool = False) -> Accessibility:
    """Whether ``a`` is the join (meet) of a set of other elements.

    On a finite lattice it suffices to test the join of everything strictly
    below (meet of everything strictly above). With ``empty_witnesses`` off
    the empty set never counts as a witness.
    """
    below = bits(L.down[a] & ~(1 << a))
    above = bits(L.up[a] & ~(1 << a))
    if below:
        acc_below = L.join_all(below) == a
    else:
        acc_below = empty_witnesses and a == L.bottom
    if above:
        acc_above = L.meet_all(above) == a
    else:
        acc_above = empty_witnesses and a == L.top
    return Accessibility(acc_below, acc_above)


def is_interlocking(L: FiniteLattice, *, empty_witnesses: bool = False) -> tuple[bool, Optional[int]]:
    """Every element is inaccessible from above, or accessible from both sides."""
    for a in range(L.n):
        acc = accessibility(L, a, empty_witnesses=empty_witnesses)
        if acc.accessible_above and not acc.accessible_below:
            return False, a
    return True, None
