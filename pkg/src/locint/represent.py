"""Interval representations of loc-lattices.

Pipeline: Stone map into sets of semi-prime filters, then a consistent order
of those filters, then read the images off as segments of that order.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Optional

from .filters import is_well_separated
from .lattice import FiniteLattice, bits, is_loc_lattice
from .ordering import Construction, LinearOrder, NotLoc, construct_order
from .stone import StoneRepresentation, stone_map
from .verdict import Verdict

__all__ = [
    "IntervalRepresentation",
    "represent_intervals",
    "verify_representation",
    "verify_faithful",
    "open_interval_check",
    "co",
]


def co(order: LinearOrder, mask: int) -> int:
    """Convex hull of ``mask`` in ``order``: the min-to-max segment, ∅ for ∅."""
    return order.hull(mask)


@dataclass(frozen=True)
class IntervalRepresentation:
    """``image[x]`` is a mask over the points listed in ``ground_order``."""

    ground_order: LinearOrder
    image: tuple[int, ...]
    faithful_checked: bool = False
    point_labels: Optional[tuple[str, ...]] = None
    fallback_used: bool = False

    def positions(self, x: int) -> list[int]:
        pos = self.ground_order.positions
        return sorted(pos[p] for p in bits(self.image[x]))

    def to_json(self, L: FiniteLattice) -> dict:
        labels = self.point_labels or tuple(str(p) for p in range(max(self.ground_order.sequence, default=-1) + 1))
        return {
            "ground_order": [labels[p] for p in self.ground_order.sequence],
            "image": {L.labels[x]: [labels[p] for p in self.ground_order.sequence if self.image[x] >> p & 1]
                      for x in range(L.n)},
            "faithful": self.faithful_checked,
        }


def _point_label(stone: StoneRepresentation, L: FiniteLattice, p: int) -> str:
    return "{" + ",".join(stone.space[p].labels(L)) + "}"


def represent_intervals(L: FiniteLattice, *, ws_direction: Literal["lower", "upper"] = "upper",
                        construction: Optional[list] = None) -> IntervalRepresentation:
    """Interval representation of a loc-lattice.

    ``faithful_checked`` is set only when the lattice is well separated in
    ``ws_direction`` and the hull law actually verifies on the result. Pass a
    list as ``construction`` to receive the ordering bookkeeping.
    """
    v = is_loc_lattice(L)
    if not v:
        raise NotLoc(Verdict.failed(f"condition {v.violated_condition}", v.witness))
    stone = stone_map(L)
    fam = stone.family(L)
    ws, _ = is_well_separated(L, ws_direction, stone.space)
    built: Construction = construct_order(fam, check_loc=False, require_hull=ws or None)
    if construction is not None:
        construction.append(built)
    rep = IntervalRepresentation(
        built.order, stone.image, False,
        tuple(_point_label(stone, L, p) for p in range(len(stone.space))),
        built.fallback_used,
    )
    v = verify_representation(L, rep)
    if not v:
        raise AssertionError(f"representation failed {v.check} at {v.witness}")
    if ws and verify_faithful(L, rep):
        rep = IntervalRepresentation(rep.ground_order, rep.image, True, rep.point_labels, rep.fallback_used)
    return rep


def verify_representation(L: FiniteLattice, R: IntervalRepresentation) -> Verdict:
    """Convexity, f(0) = ∅, order embedding and the meet law, first failure witnessed."""
    f, order = R.image, R.ground_order
    for x in range(L.n):
        if f[x] & ~order.mask:
            return Verdict.failed("carrier", x)
        if co(order, f[x]) != f[x]:
            return Verdict.failed("convexity", x)
    if f[L.bottom]:
        return Verdict.failed("bottom", L.bottom)
    for a in range(L.n):
        for b in range(L.n):
            if L.leq(a, b) != (f[a] & f[b] == f[a]):
                return Verdict.failed("embedding", (a, b))
    for a in range(L.n):
        for b in range(L.n):
            if f[L.meet(a, b)] != f[a] & f[b]:
                return Verdict.failed("meet", (a, b))
    return Verdict.passed()


def verify_faithful(L: FiniteLattice, R: IntervalRepresentation) -> Verdict:
    f, order = R.image, R.ground_order
    for a in range(L.n):
        for b in range(a, L.n):
            if f[L.join(a, b)] != co(order, f[a] | f[b]):
                return Verdict.failed("hull", (a, b))
    return Verdict.passed()


def open_interval_check(R: IntervalRepresentation, a: int, L: Optional[FiniteLattice] = None) -> bool:
    """Whether image(a) is (u, v), (u, →), (←, v) or the whole ground set.

    In a finite order every nonempty segment is open: a segment strictly
    inside is (u, v) with u, v its outer neighbours, a prefix is (←, v), a
    suffix is (u, →). The empty segment is (u, v) for adjacent u < v and so is
    open exactly when the order has at least two points. The forms are tested literally.
    """
    seq = R.ground_order.sequence
    n = len(seq)
    idx = R.positions(a)
    if not idx:
        return any(True for _ in zip(seq, seq[1:]))
    lo, hi = idx[0], idx[-1]
    if hi - lo + 1 != len(idx):
        return False
    if lo == 0 and hi == n - 1:
        return True
    if lo == 0:
        return hi + 1 < n
    if hi == n - 1:
        return lo - 1 >= 0
    return lo - 1 >= 0 and hi + 1 < n
