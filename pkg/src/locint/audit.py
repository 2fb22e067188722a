"""Exhaustive lemma audits over set families and construction traces,
plus the seeded construction-versus-search differential report."""
from __future__ import annotations

import hashlib
import itertools
import json
import warnings
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional

from .lattice import bits, is_loc_lattice
from .ordering import Construction, OracleFallbackUsed, construct_order, initial_triple, is_consistent
from .oracle import SearchBudget, brute_force_order, enumerate_lattices, random_loc_families
from .setfam import (
    SetFamily,
    _separates,
    completely_separated,
    is_loc_setfamily,
    leader_preorder,
    representative_candidates,
    representative_family,
    separation_profile,
)
from .stone import stone_map

__all__ = [
    "LemmaResult",
    "audit_family",
    "audit_construction",
    "criterion_families",
    "differential_report",
    "report_bytes",
]


@dataclass
class LemmaResult:
    checked: int = 0
    failures: int = 0
    witness: Optional[object] = None

    def record(self, ok: bool, witness=None) -> None:
        self.checked += 1
        if not ok:
            self.failures += 1
            if self.witness is None:
                self.witness = witness

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def to_json(self) -> dict:
        return {"checked": self.checked, "failures": self.failures,
                "witness": None if self.witness is None else repr(self.witness)}


def _sub(a: int, b: int) -> bool:
    return a & b == a


def _incomparable(a: int, b: int) -> bool:
    return not _sub(a, b) and not _sub(b, a)


def _audit_members(F: SetFamily, out: dict[str, LemmaResult]) -> None:
    ms = [m for m in F.members if m]
    j = F.join
    r1, r2, r3, r4 = (out.setdefault(k, LemmaResult()) for k in ("lemp1.1", "lemp1.2", "lemp1.3", "lemp1.4"))
    for A, B, C in itertools.product(ms, repeat=3):
        if _incomparable(A, B) and _incomparable(A, C) and _incomparable(B, C):
            held = _sub(A, j(B, C)) + _sub(B, j(A, C)) + _sub(C, j(A, B))
            r1.record(held <= 1, (A, B, C))
        if not (A & B or A & C or B & C) and B & j(A, C):
            r2.record(_sub(B, j(A, C)), (A, B, C))
        if A & C and B & C:
            r3.record(_sub(j(A, B) & ~(A | B), C), (A, B, C))
        if C & A & ~B and C & B & ~A:
            r4.record(_sub(A & B, C), (A, B, C))


def _audit_points(F: SetFamily, out: dict[str, LemmaResult]) -> None:
    n = F.n
    r = out.setdefault("lem04", LemmaResult())
    for a, b, c in itertools.product(range(n), repeat=3):
        r.record(F.between(a, b, c) or F.between(a, c, b) or F.between(b, a, c), (a, b, c))

    sep = [[a != b and completely_separated(F, a, b) for b in range(n)] for a in range(n)]
    r3i = out.setdefault("lemp3.i", LemmaResult())
    r3ii = out.setdefault("lemp3.ii", LemmaResult())
    for a, b, c in itertools.permutations(range(n), 3):
        if not (sep[a][b] and sep[a][c] and sep[b][c]):
            continue
        t = F.between(a, b, c)
        for A, B, C in itertools.product(*representative_candidates(F, [a, b, c])):
            inside = _sub(B, F.join(A, C))
            r3i.record(t == inside, (a, b, c, A, B, C))
            if inside:
                r3ii.record(not A & C and not F.join(B, C) >> a & 1 and not F.join(A, B) >> c & 1,
                            (a, b, c, A, B, C))

    prof = separation_profile(F)
    r02 = out.setdefault("lem02", LemmaResult())
    if prof.completely:
        r02.record(bool(prof.totally), prof.totally.witness)

    p1, p2, p3 = (out.setdefault(k, LemmaResult()) for k in ("lemp4.1", "lemp4.2", "lemp4.3"))
    for tup in itertools.permutations(range(n), 5):
        if not all(sep[x][y] for x, y in itertools.combinations(tup, 2)):
            continue
        A, B, C, D, E = representative_family(F, list(tup))
        j = F.join
        # forward direction only, see the notes on the converse
        if _sub(B, j(A, C)) and _sub(C, j(B, D)):
            p1.record(_sub(B, j(A, D)) and _sub(C, j(A, D)), tup)
        lhs = _sub(B, j(A, C)) and _sub(D, j(B, C))
        rhs = _sub(B, j(A, D)) and _sub(D, j(A, C))
        p2.record(lhs == rhs, tup)
        if _sub(B, j(A, C)) and _sub(D, j(B, E)):
            p3.record(_sub(B, j(C, D)) or _sub(B, j(A, E)), tup)


def _independent_count(lead, pts: Iterable[int], k: int) -> bool:
    return any(all(lead.independent(a, b) for a, b in itertools.combinations(c, 2))
               for c in itertools.combinations(sorted(pts), k))


def _audit_leaders(F: SetFamily, out: dict[str, LemmaResult]) -> None:
    """|M(x)| ≤ 2 with adjacent members, and L(x) convex, against the first ordered set."""
    r = out.setdefault("M(x) bound", LemmaResult())
    rl = out.setdefault("L(x) convex", LemmaResult())
    if F.n < 2:
        return
    t = initial_triple(F)
    if t.phi is None:
        Y = t.order.sequence
        pos = t.order.positions
        for x in range(F.n):
            if x in pos:
                continue
            Mp = sorted(pos[y] for y in Y if F.leads(y, x))
            Lp = sorted(pos[y] for y in Y if F.leads(x, y))
            r.record(len(Mp) <= 2 and (len(Mp) < 2 or Mp[1] == Mp[0] + 1), (x, Mp))
            rl.record(not Lp or Lp[-1] - Lp[0] + 1 == len(Lp), (x, Lp))


def audit_construction(F: SetFamily, built: Construction, out: Optional[dict] = None) -> dict[str, LemmaResult]:
    """Section lemmas on every classification step the construction recorded."""
    out = {} if out is None else out
    lead = leader_preorder(F)
    r7, r8, r5, r6, r10 = (out.setdefault(k, LemmaResult())
                           for k in ("lemp7", "lemp8", "lemp5", "lemp6", "lemp10"))
    for step in built.steps:
        Y = step.base
        n = len(Y)
        cls = [c for c in step.classifications if c.section is not None]
        for c in cls:
            for y1 in c.section.left:
                for y2 in c.section.right:
                    r7.record(F.between(y1, c.point, y2), (c.point, y1, y2))
        by_cut: dict[int, list] = {}
        for c in cls:
            by_cut.setdefault(c.section.cut, []).append(c)
        for k, group in by_cut.items():
            A, B = sum(1 << y for y in Y[:k]), sum(1 << y for y in Y[k:])
            straddle = [c.point for c in group if c.L_set & A and c.L_set & B]
            r8.record(len(straddle) <= 1, (k, straddle))
            if 0 < k < n:
                ordinary = [c for c in group if not c.exceptional]
                s1 = [c.point for c in ordinary if c.L_set & A]
                s2 = [c.point for c in ordinary if c.L_set & B]
                r10.record(not _independent_count(lead, s1, 2) and not _independent_count(lead, s2, 2), (k, s1, s2))
        for y in Y:
            pocket = [c.point for c in step.classifications if c.L_set >> y & 1]
            r5.record(not _independent_count(lead, pocket, 3), (y, pocket))
        U1 = [c.point for c in cls if c.type == "I_b" and c.section.cut == 0]
        U2 = [c.point for c in cls if c.type == "I_c" and c.section.cut == n]
        r5.record(not _independent_count(lead, U1, 2) and not _independent_count(lead, U2, 2), (U1, U2))
        for u1 in U1:
            for u2 in U2:
                r6.record(lead.independent(u1, u2), (u1, u2))
    return out


def audit_family(F: SetFamily, built: Optional[Construction] = None) -> dict[str, LemmaResult]:
    """Every family-level lemma suite; construction lemmas too when ``built`` is given.

    ``F`` must be a loc family.
    """
    v = is_loc_setfamily(F)
    if not v:
        raise ValueError(f"audit needs a loc family, {v.check} fails at {v.witness}")
    out: dict[str, LemmaResult] = {}
    _audit_members(F, out)
    _audit_points(F, out)
    if _separates(F):
        _audit_leaders(F, out)
        if built is not None:
            audit_construction(F, built, out)
    return out


# the differential corpus


def criterion_families(seed: int = 0, count: int = 500, max_points: int = 6,
                       corpus_max: int = 6) -> Iterator[tuple[str, SetFamily]]:
    """Stone images of the enumerated lattices, then seeded random families.

    Only separating loc families with at most ``max_points`` points are kept.
    """
    for n in range(1, corpus_max + 1):
        for i, L in enumerate(enumerate_lattices(n)):
            F = stone_map(L).family(L)
            if F.n <= max_points and _separates(F) and is_loc_setfamily(F):
                tag = "loc" if is_loc_lattice(L) else "nonloc"
                yield f"stone:n={n}:#{i}:{tag}", F
    for i, F in enumerate(random_loc_families(count, seed, max_points)):
        yield f"random:seed={seed}:#{i}", F


def differential_report(seed: int = 0, count: int = 500, max_points: int = 6, corpus_max: int = 6,
                        budget: Optional[SearchBudget] = None, audit: bool = True) -> dict:
    """Run construction and exhaustive search side by side on the corpus.

    The report holds no timings or addresses, so equal arguments give equal
    bytes under ``report_bytes``.
    """
    budget = budget or SearchBudget(max_points=max_points, seed=seed)
    rows = []
    totals = {"families": 0, "construction_ok": 0, "search_ok": 0, "both_consistent": 0,
              "ambiguous_fallback": 0, "hull_repair": 0, "audit_failures": 0}
    lemma_totals: dict[str, dict] = {}
    for source, F in criterion_families(seed, count, max_points, corpus_max):
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", OracleFallbackUsed)
            built = construct_order(F)
        brute = brute_force_order(F, budget)
        c_ok = is_consistent(F, built.order)[0]
        b_ok = brute is not None and is_consistent(F, brute)[0]
        row = {
            "source": source,
            "points": F.n,
            "members": len(F.members),
            "family": [bits(m) for m in F.members],
            "constructed": list(built.order.sequence),
            "searched": None if brute is None else list(brute.sequence),
            "constructed_consistent": c_ok,
            "searched_consistent": b_ok,
            "fallback": list(built.fallback_reasons),
        }
        totals["families"] += 1
        totals["construction_ok"] += c_ok
        totals["search_ok"] += b_ok
        totals["both_consistent"] += c_ok and b_ok
        totals["ambiguous_fallback"] += built.ambiguous_fallback
        totals["hull_repair"] += built.hull_repair
        if audit:
            res = audit_family(F, built)
            bad = sorted(k for k, r in res.items() if not r.ok)
            row["audit_failures"] = bad
            totals["audit_failures"] += bool(bad)
            for k, r in res.items():
                t = lemma_totals.setdefault(k, {"checked": 0, "failures": 0, "first_witness": None})
                t["checked"] += r.checked
                t["failures"] += r.failures
                if r.failures and t["first_witness"] is None:
                    t["first_witness"] = f"{source}: {r.witness!r}"
        rows.append(row)
    return {
        "seed": seed,
        "count": count,
        "max_points": max_points,
        "corpus_max": corpus_max,
        "totals": totals,
        "lemmas": {k: lemma_totals[k] for k in sorted(lemma_totals)},
        "families": rows,
    }


def report_bytes(report: dict) -> bytes:
    return json.dumps(report, sort_keys=True, ensure_ascii=False, separators=(",", ":")).encode("utf-8")


def report_digest(report: dict) -> str:
    return hashlib.sha256(report_bytes(report)).hexdigest()
