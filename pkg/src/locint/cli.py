"""Command-line front door: ``locint <command> INPUT [options]``."""
from __future__ import annotations

import functools
import hashlib
import json
import sys
import time
import warnings
from typing import Any, Optional

import click

from . import audit as audit_mod
from .filters import is_completely_separated, is_semi_prime, is_well_separated, semiprime_filters
from .io import BadInput, fixture, fixture_names, load_input
from .lattice import FiniteLattice, LatticeError, bits, is_interlocking, is_loc_lattice
from .oracle import BudgetExceeded, SearchBudget, brute_force_order, brute_force_representation, canonical_form, enumerate_lattices
from .ordering import NotLoc, NotSeparating, OracleFallbackUsed, construct_order, is_consistent
from .represent import represent_intervals, verify_faithful, verify_representation
from .setfam import NotASetLattice, SetFamily, is_loc_setfamily, separation_profile
from .stone import stone_map, verify_stone
from .verdict import SizeGuard

COMMANDS = ("check-loc", "filters", "stone", "order", "represent", "verify", "oracle", "enumerate", "audit")


class Report:
    """Machine-readable outcome; fields keep a fixed order."""

    def __init__(self, command: str, digest: str, seed: int):
        self.command = command
        self.digest = digest
        self.seed = seed
        self.verdicts: dict[str, dict] = {}
        self.result: dict[str, Any] = {}
        self.fallback: list[str] = []
        self.timing: Optional[float] = None

    def verdict(self, name: str, ok: bool, witness: Any = None) -> None:
        self.verdicts[name] = {"ok": bool(ok), "witness": witness}

    @property
    def ok(self) -> bool:
        return all(v["ok"] for v in self.verdicts.values())

    def to_json(self) -> dict:
        out = {
            "command": self.command,
            "inputs_digest": self.digest,
            "seed": self.seed,
            "verdicts": self.verdicts,
            "witnesses": {k: v["witness"] for k, v in self.verdicts.items() if v["witness"] is not None},
            "fallback": self.fallback,
            "result": self.result,
        }
        if self.timing is not None:
            out["timing_s"] = round(self.timing, 6)
        return out

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return json.dumps(self.to_json(), indent=2, ensure_ascii=False)
        lines = [f"{self.command}: {'PASS' if self.ok else 'FAIL'}"]
        for name, v in self.verdicts.items():
            w = "" if v["witness"] is None else f"  witness={json.dumps(v['witness'], ensure_ascii=False)}"
            lines.append(f"  {name}: {'pass' if v['ok'] else 'fail'}{w}")
        for k, v in self.result.items():
            lines.append(f"  {k} = {json.dumps(v, ensure_ascii=False)}")
        for f in self.fallback:
            lines.append(f"  fallback: {f}")
        if self.timing is not None:
            lines.append(f"  timing_s = {self.timing:.6f}")
        return "\n".join(lines)


def _digest(command: str, source: Optional[str], params: dict) -> str:
    h = hashlib.sha256()
    h.update(command.encode())
    if source is not None:
        try:
            with open(source, "rb") as fh:
                h.update(fh.read())
        except OSError:
            h.update(source.encode())
    h.update(json.dumps(params, sort_keys=True).encode())
    return h.hexdigest()


def common_options(fn):
    @click.option("--format", "fmt", type=click.Choice(["json", "text"]), default="json", show_default=True)
    @click.option("--seed", type=int, default=0, show_default=True)
    @click.option("--budget-points", type=int, default=8, show_default=True,
                  help="Largest ground set the exhaustive searches accept.")
    @click.option("--ws-direction", type=click.Choice(["lower", "upper"]), default="upper", show_default=True,
                  help="Reading of well-separatedness.")
    @click.option("--adjoin-bottom", is_flag=True, help="Add a fresh least element before processing.")
    @click.option("--timing", is_flag=True, help="Add wall-clock time (breaks byte-identical reports).")
    @functools.wraps(fn)
    def wrapper(**kw):
        return fn(**kw)

    return wrapper


def _emit(rep: Report, fmt: str, started: float, timing: bool) -> None:
    if timing:
        rep.timing = time.perf_counter() - started
    click.echo(rep.render(fmt))
    sys.exit(0 if rep.ok else 1)


def _run(command: str, source: Optional[str], opts: dict, body) -> None:
    started = time.perf_counter()
    params = {k: v for k, v in opts.items() if k not in ("fmt", "timing")}
    rep = Report(command, _digest(command, source, params), opts["seed"])
    try:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always", OracleFallbackUsed)
            body(rep)
        rep.fallback.extend(str(w.message) for w in caught if issubclass(w.category, OracleFallbackUsed))
    except BadInput as exc:
        rep.verdict("input", False, {"location": exc.location, "message": str(exc)})
    except (LatticeError, NotASetLattice, SizeGuard, BudgetExceeded) as exc:
        rep.verdict("input", False, {"error": type(exc).__name__, "message": str(exc)})
    _emit(rep, opts["fmt"], started, opts["timing"])


def _load(source: str, opts: dict):
    return load_input(source, adjoin=opts["adjoin_bottom"])


def _lab(L: FiniteLattice, xs) -> list[str]:
    return [L.labels[x] for x in xs]


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
def main() -> None:
    """Loc-lattices, semi-prime filters and interval representations."""


@main.command("check-loc")
@click.argument("source")
@common_options
def check_loc(source, **opts):
    """Decide the loc axioms for a lattice or a set family."""
    def body(rep: Report):
        obj = _load(source, opts)
        if isinstance(obj, FiniteLattice):
            v = is_loc_lattice(obj)
            rep.verdict("loc", v.is_loc, None if v else
                        {"condition": v.violated_condition, "triple": _lab(obj, v.witness)})
            ok, a = is_interlocking(obj)
            rep.result["interlocking"] = ok
        else:
            v = is_loc_setfamily(obj)
            rep.verdict("loc", bool(v), None if v else
                        {"condition": v.check, "members": [obj.labels(m) for m in v.witness]})
    _run("check-loc", source, opts, body)


@main.command("filters")
@click.argument("source")
@common_options
def filters_cmd(source, **opts):
    """Semi-prime filters and the lattice separation predicates."""
    def body(rep: Report):
        L = _load(source, opts)
        if not isinstance(L, FiniteLattice):
            raise BadInput("expected a lattice")
        space = semiprime_filters(L)
        bad = next((F for F in space if not is_semi_prime(L, F)[0]), None)
        rep.verdict("semi_prime", bad is None, None if bad is None else bad.labels(L))
        rep.result["semi_prime_filters"] = [F.labels(L) for F in space]
        ws, wit = is_well_separated(L, opts["ws_direction"], space)
        rep.result["well_separated"] = {"direction": opts["ws_direction"], "holds": ws,
                                        "witness": None if ws else {"filter": wit[0].labels(L), "x": L.labels[wit[1]]}}
        cs, wit = is_completely_separated(L, space)
        rep.result["completely_separated"] = {"holds": cs,
                                              "witness": None if cs else [wit[0].labels(L), wit[1].labels(L)]}
    _run("filters", source, opts, body)


@main.command("stone")
@click.argument("source")
@common_options
def stone_cmd(source, **opts):
    """Stone map into sets of semi-prime filters, verified."""
    def body(rep: Report):
        L = _load(source, opts)
        if not isinstance(L, FiniteLattice):
            raise BadInput("expected a lattice")
        S = stone_map(L)
        v = verify_stone(L, S)
        rep.verdict("stone", bool(v), v.witness)
        rep.result["representation"] = S.to_json(L)
    _run("stone", source, opts, body)


def _order_family(F: SetFamily, rep: Report, budget: SearchBudget) -> None:
    loc = F.n and is_loc_setfamily_safe(F)
    order = None
    if loc:
        try:
            built = construct_order(F)
            order = built.order
            rep.result["method"] = "construction"
            rep.result["hull_required"] = built.hull_required
        except (NotLoc, NotSeparating):
            order = None
    if order is None:
        order = brute_force_order(F, budget)
        rep.result["method"] = "search"
    if order is None:
        rep.verdict("consistent_order", False, "no consistent order")
        return
    ok, wit = is_consistent(F, order)
    rep.verdict("consistent_order", ok, None if ok else [F.ground[p] for p in wit])
    rep.result["order"] = order.labels(F.ground)


def is_loc_setfamily_safe(F: SetFamily) -> bool:
    try:
        return bool(is_loc_setfamily(F))
    except NotASetLattice:
        return False


@main.command("order")
@click.argument("source")
@common_options
def order_cmd(source, **opts):
    """Consistent linear order of a set family's ground set."""
    def body(rep: Report):
        F = _load(source, opts)
        if not isinstance(F, SetFamily):
            raise BadInput("expected a set family")
        _order_family(F, rep, SearchBudget(max_points=opts["budget_points"], seed=opts["seed"]))
    _run("order", source, opts, body)


@main.command("represent")
@click.argument("source")
@common_options
def represent_cmd(source, **opts):
    """Interval representation of a loc-lattice."""
    def body(rep: Report):
        L = _load(source, opts)
        if not isinstance(L, FiniteLattice):
            raise BadInput("expected a lattice")
        try:
            R = represent_intervals(L, ws_direction=opts["ws_direction"])
        except NotLoc as exc:
            rep.verdict("loc", False, {"condition": exc.verdict.check, "triple": _lab(L, exc.verdict.witness)})
            return
        v = verify_representation(L, R)
        rep.verdict("representation", bool(v), v.witness)
        rep.result["representation"] = R.to_json(L)
    _run("represent", source, opts, body)


@main.command("verify")
@click.argument("source")
@common_options
def verify_cmd(source, **opts):
    """Run every applicable check on a lattice or a family."""
    def body(rep: Report):
        obj = _load(source, opts)
        if isinstance(obj, FiniteLattice):
            L = obj
            S = stone_map(L)
            v = verify_stone(L, S)
            rep.verdict("stone", bool(v), v.witness)
            lv = is_loc_lattice(L)
            rep.result["loc"] = lv.is_loc
            if lv:
                R = represent_intervals(L, ws_direction=opts["ws_direction"])
                v = verify_representation(L, R)
                rep.verdict("representation", bool(v), v.witness)
                ws, _ = is_well_separated(L, opts["ws_direction"], S.space)
                rep.result["well_separated"] = ws
                if ws:
                    v = verify_faithful(L, R)
                    rep.verdict("faithful", bool(v), v.witness)
        else:
            F = obj
            prof = separation_profile(F)
            rep.result["separation"] = {k: bool(getattr(prof, k)) for k in ("separates", "completely", "totally", "well")}
            loc = is_loc_setfamily_safe(F)
            rep.result["loc"] = loc
            _order_family(F, rep, SearchBudget(max_points=opts["budget_points"], seed=opts["seed"]))
    _run("verify", source, opts, body)


@main.command("oracle")
@click.argument("source")
@click.option("--faithful", is_flag=True, help="Require joins to map to convex hulls.")
@click.option("--points", type=int, default=None, help="Chain size for lattice searches (default: up to the budget).")
@common_options
def oracle_cmd(source, faithful, points, **opts):
    """Exhaustive search: consistent orders or interval embeddings."""
    def body(rep: Report):
        obj = _load(source, opts)
        budget = SearchBudget(max_points=opts["budget_points"], seed=opts["seed"])
        if isinstance(obj, SetFamily):
            o = brute_force_order(obj, budget)
            rep.verdict("consistent_order", o is not None, None if o else "no consistent order")
            if o is not None:
                rep.result["order"] = o.labels(obj.ground)
            return
        L = obj
        sizes = [points] if points is not None else list(range(1, budget.max_points + 1))
        found = None
        tried = []
        for n in sizes:
            tried.append(n)
            found = brute_force_representation(L, n, faithful, budget)
            if found is not None:
                break
        rep.result["searched_points"] = tried
        rep.verdict("faithful_representation" if faithful else "representation", found is not None)
        if found is not None:
            rep.result["representation"] = found.to_json(L)
    _run("oracle", source, opts, body)


@main.command("enumerate")
@click.argument("n", type=int)
@common_options
def enumerate_cmd(n, **opts):
    """All lattices on N elements up to isomorphism (N ≤ 7)."""
    def body(rep: Report):
        lats = list(enumerate_lattices(n))
        forms = [canonical_form(L) for L in lats]
        rep.verdict("isomorphism_free", len(set(forms)) == len(forms))
        rep.result["count"] = len(lats)
        rep.result["lattices"] = [dict(L.to_json(), loc=bool(is_loc_lattice(L))) for L in lats]
    _run("enumerate", None, dict(opts, n=n), body)


@main.command("audit")
@click.option("--count", type=int, default=500, show_default=True, help="Random families in the corpus.")
@click.option("--max-points", type=int, default=6, show_default=True)
@click.option("--corpus-max", type=int, default=6, show_default=True, help="Largest enumerated lattice.")
@click.option("--full-report", is_flag=True, help="Include every family row.")
@common_options
def audit_cmd(count, max_points, corpus_max, full_report, **opts):
    """Lemma suites over fixtures, the enumerated corpus and random families."""
    def body(rep: Report):
        for name in fixture_names():
            F = fixture(name)
            if isinstance(F, SetFamily) and is_loc_setfamily_safe(F):
                res = audit_mod.audit_family(F)
                bad = sorted(k for k, r in res.items() if not r.ok)
                rep.verdict(f"fixture {name}", not bad, bad or None)
        report = audit_mod.differential_report(opts["seed"], count, max_points, corpus_max,
                                               SearchBudget(max_points=opts["budget_points"], seed=opts["seed"]))
        t = report["totals"]
        rep.verdict("differential", t["both_consistent"] == t["families"])
        for k, v in report["lemmas"].items():
            rep.verdict(k, v["failures"] == 0, v["first_witness"])
        rep.result["totals"] = t
        rep.result["lemmas"] = {k: v["checked"] for k, v in report["lemmas"].items()}
        rep.result["report_sha256"] = audit_mod.report_digest(report)
        if full_report:
            rep.result["families"] = report["families"]
    _run("audit", None, dict(opts, count=count, max_points=max_points, corpus_max=corpus_max), body)


if __name__ == "__main__":
    main()
