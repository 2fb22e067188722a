"""The Stone map of a lattice into sets of semi-prime filters."""
from __future__ import annotations

from dataclasses import dataclass

from .filters import SemiPrimeSpace, semiprime_filters, DEFAULT_MAX_ELEMENTS
from .lattice import FiniteLattice, bits
from .setfam import SetFamily
from .verdict import LocIntError, Verdict

__all__ = ["StoneRepresentation", "InvariantViolation", "stone_map", "verify_stone"]


class InvariantViolation(LocIntError):
    """A representation that must be correct by theory failed its own check."""


@dataclass(frozen=True)
class StoneRepresentation:
    """``image[x]`` is the mask of point indices (into ``space``) whose filter holds x."""

    space: SemiPrimeSpace
    image: tuple[int, ...]

    def point_labels(self, L: FiniteLattice) -> list[list[str]]:
        return [F.labels(L) for F in self.space]

    def family(self, L: FiniteLattice) -> SetFamily:
        """The image f(L) as a set family over X_L (duplicates collapsed)."""
        members = []
        seen = set()
        for m in self.image:
            if m not in seen:
                seen.add(m)
                members.append(m)
        return SetFamily.from_masks([f"F{i}" for i in range(len(self.space))], members)

    def to_json(self, L: FiniteLattice) -> dict:
        return {
            "points": self.point_labels(L),
            "image": {L.labels[x]: bits(self.image[x]) for x in range(L.n)},
        }


def stone_map(L: FiniteLattice, *, max_elements: int = DEFAULT_MAX_ELEMENTS) -> StoneRepresentation:
    space = semiprime_filters(L, max_elements=max_elements)
    image = tuple(
        sum(1 << p for p, F in enumerate(space) if x in F) for x in range(L.n)
    )
    rep = StoneRepresentation(space, image)
    verdict = verify_stone(L, rep)
    if not verdict:
        raise InvariantViolation(f"Stone map failed {verdict.check} at {verdict.witness}")
    return rep


def verify_stone(L: FiniteLattice, S: StoneRepresentation) -> Verdict:
    """Re-check f(0) = ∅, order embedding, meets, joins and point separation."""
    f = S.image
    if f[L.bottom]:
        return Verdict.failed("bottom", L.bottom)
    for a in range(L.n):
        for b in range(a, L.n):
            if L.leq(a, b) != (f[a] & f[b] == f[a]) or L.leq(b, a) != (f[a] & f[b] == f[b]):
                return Verdict.failed("embedding", (a, b))
    for a in range(L.n):
        for b in range(L.n):
            if f[L.meet(a, b)] != f[a] & f[b]:
                return Verdict.failed("meet", (a, b))
            union = 0
            for x in bits(L.closed_internal_mask(a, b)):
                union |= f[x]
            if f[L.join(a, b)] != union:
                return Verdict.failed("join", (a, b))
    k = len(S.space)
    for p in range(k):
        for q in range(p + 1, k):
            if not any((m >> p & 1) != (m >> q & 1) for m in f):
                return Verdict.failed("separation", (p, q))
    return Verdict.passed()
