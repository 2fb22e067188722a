"""Filters, ideals and semi-prime filters of a finite lattice."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Optional

from .lattice import FiniteLattice, bits
from .verdict import LocIntError, SizeGuard

__all__ = [
    "Filter",
    "Ideal",
    "SemiPrimeSpace",
    "Overlap",
    "enumerate_filters",
    "enumerate_ideals",
    "is_filter",
    "is_ideal",
    "is_semi_prime",
    "extend_to_semiprime",
    "semiprime_filters",
    "is_well_separated",
    "is_completely_separated",
    "DEFAULT_MAX_ELEMENTS",
]

DEFAULT_MAX_ELEMENTS = 64


class Overlap(LocIntError):
    """The filter and ideal handed to the extension step intersect."""


@dataclass(frozen=True, order=True)
class Filter:
    """A nonempty proper up-set closed under meets, stored as an element mask.

    Ordering compares masks, which is the canonical order used everywhere.
    """

    mask: int

    def __contains__(self, x: int) -> bool:
        return bool(self.mask >> x & 1)

    def members(self) -> list[int]:
        return bits(self.mask)

    def labels(self, L: FiniteLattice) -> list[str]:
        return L.label_set(self.mask)


@dataclass(frozen=True, order=True)
class Ideal:
    mask: int

    def __contains__(self, x: int) -> bool:
        return bool(self.mask >> x & 1)

    def members(self) -> list[int]:
        return bits(self.mask)


def is_filter(L: FiniteLattice, mask: int) -> bool:
    if mask == 0 or mask == L.full:
        return False
    for a in bits(mask):
        if L.up[a] & ~mask:
            return False
        for b in bits(mask):
            if not mask >> L.meet(a, b) & 1:
                return False
    return True


def is_ideal(L: FiniteLattice, mask: int) -> bool:
    if mask == 0 or mask == L.full:
        return False
    for a in bits(mask):
        if L.down[a] & ~mask:
            return False
        for b in bits(mask):
            if not mask >> L.join(a, b) & 1:
                return False
    return True


def _guard(L: FiniteLattice, max_elements: int) -> None:
    if L.n > max_elements:
        raise SizeGuard(f"lattice has {L.n} elements, bound is {max_elements}")


def enumerate_filters(L: FiniteLattice, *, max_elements: int = DEFAULT_MAX_ELEMENTS) -> list[Filter]:
    """All filters in canonical (mask) order.

    In a finite lattice every filter is the principal up-set of the meet of
    its members, and it is proper exactly when that generator is not 0.
    """
    _guard(L, max_elements)
    return sorted(Filter(L.up[g]) for g in range(L.n) if g != L.bottom)


def enumerate_ideals(L: FiniteLattice, *, max_elements: int = DEFAULT_MAX_ELEMENTS) -> list[Ideal]:
    _guard(L, max_elements)
    top = L.top
    return sorted(Ideal(L.down[g]) for g in range(L.n) if g != top)


def is_semi_prime(L: FiniteLattice, F: Filter) -> tuple[bool, Optional[tuple[int, int]]]:
    """Semi-primeness of ``F`` with the first pair (a, b) that breaks it."""
    m = F.mask
    for a in range(L.n):
        for b in range(L.n):
            if m >> L.join(a, b) & 1 and not (L.closed_internal_mask(a, b) & m):
                return False, (a, b)
    return True, None


def extend_to_semiprime(L: FiniteLattice, F: Filter, I: Ideal) -> Filter:
    """Grow ``F`` to a maximal filter that still avoids ``I``.

    Elements are tried in index order; adding ``e`` to the principal filter
    generated by ``g`` yields the filter generated by ``g ∧ e``. The result is
    semi-prime whenever ``F`` and ``I`` are disjoint.
    """
    if not is_filter(L, F.mask):
        raise ValueError("F is not a filter")
    if not is_ideal(L, I.mask):
        raise ValueError("I is not an ideal")
    if F.mask & I.mask:
        raise Overlap(f"filter and ideal share {L.label_set(F.mask & I.mask)}")
    gen = L.meet_all(bits(F.mask))
    grown = True
    while grown:
        grown = False
        for e in range(L.n):
            if L.up[gen] >> e & 1:
                continue
            cand = L.meet(gen, e)
            if not L.up[cand] & I.mask:
                gen = cand
                grown = True
                break
    return Filter(L.up[gen])


@dataclass(frozen=True)
class SemiPrimeSpace:
    """The semi-prime filters of a lattice in canonical order."""

    filters: tuple[Filter, ...]

    def __len__(self) -> int:
        return len(self.filters)

    def __iter__(self):
        return iter(self.filters)

    def __getitem__(self, i: int) -> Filter:
        return self.filters[i]


def semiprime_filters(L: FiniteLattice, *, max_elements: int = DEFAULT_MAX_ELEMENTS) -> SemiPrimeSpace:
    return SemiPrimeSpace(tuple(F for F in enumerate_filters(L, max_elements=max_elements)
                                if is_semi_prime(L, F)[0]))


def is_well_separated(
    L: FiniteLattice,
    direction: Literal["lower", "upper"] = "upper",
    space: Optional[SemiPrimeSpace] = None,
) -> tuple[bool, Optional[tuple[Filter, int]]]:
    """Well-separatedness in either reading, with a failing (F, x).

    ``lower``: every x outside F other than 0 has some y in F with x ⋠ y.
    ``upper``: every x outside F has some y in F with y ⋠ x.
    """
    if direction not in ("lower", "upper"):
        raise ValueError(f"unknown direction {direction!r}")
    space = semiprime_filters(L) if space is None else space
    for F in space:
        for x in range(L.n):
            if x in F:
                continue
            if direction == "lower":
                if x == L.bottom:
                    continue
                ok = any(not L.leq(x, y) for y in F.members())
            else:
                ok = any(not L.leq(y, x) for y in F.members())
            if not ok:
                return False, (F, x)
    return True, None


def is_completely_separated(
    L: FiniteLattice, space: Optional[SemiPrimeSpace] = None
) -> tuple[bool, Optional[tuple[Filter, Filter]]]:
    """Semi-prime filters pairwise incomparable; witness is a pair F ⊂ G."""
    space = semiprime_filters(L) if space is None else space
    fs = list(space)
    for i, F in enumerate(fs):
        for G in fs[i + 1:]:
            if F.mask & G.mask == F.mask:
                return False, (F, G)
            if F.mask & G.mask == G.mask:
                return False, (G, F)
    return True, None
