"""JSON input schemas and the shipped fixtures."""
from __future__ import annotations

import json
from importlib import resources
from pathlib import Path
from typing import Any, Union

from .lattice import FiniteLattice, LatticeError, adjoin_bottom, build_lattice
from .setfam import SetFamily
from .verdict import LocIntError

__all__ = ["BadInput", "load_json", "lattice_from_json", "family_from_json", "load_input",
           "fixture", "fixture_names"]

LATTICE_FIXTURES = ("CHAIN3", "M3", "N5", "B2")
FAMILY_FIXTURES = ("FAM-CHAIN", "FAM-INT", "FAM-FIVE", "FAM-CENTER", "FAM-TRIANGLE", "FAM-NONLOC")


class BadInput(LocIntError):
    def __init__(self, message: str, location: str = "$"):
        super().__init__(f"{location}: {message}")
        self.location = location


def load_json(source: Union[str, Path]) -> Any:
    try:
        text = Path(source).read_text(encoding="utf-8")
    except OSError as exc:
        raise BadInput(f"cannot read input ({exc.strerror})", str(source)) from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise BadInput(f"invalid JSON: {exc.msg}", f"{source}:{exc.lineno}:{exc.colno}") from None


def _labels(doc: dict, key: str) -> list[str]:
    vals = doc.get(key)
    if not isinstance(vals, list):
        raise BadInput("expected a list", f"$.{key}")
    for i, v in enumerate(vals):
        if not isinstance(v, (str, int)) or isinstance(v, bool):
            raise BadInput("labels must be strings or integers", f"$.{key}[{i}]")
    out = [str(v) for v in vals]
    if len(set(out)) != len(out):
        raise BadInput("labels must be distinct", f"$.{key}")
    return out


def lattice_from_json(doc: Any, *, adjoin: bool = False) -> FiniteLattice:
    if not isinstance(doc, dict):
        raise BadInput("expected an object with 'elements' and 'covers'")
    labels = _labels(doc, "elements")
    covers = doc.get("covers")
    if not isinstance(covers, list):
        raise BadInput("expected a list of pairs", "$.covers")
    pairs = []
    known = set(labels)
    for i, c in enumerate(covers):
        if not (isinstance(c, list) and len(c) == 2):
            raise BadInput("expected a pair [lower, upper]", f"$.covers[{i}]")
        lo, hi = str(c[0]), str(c[1])
        for j, lab in enumerate((lo, hi)):
            if lab not in known:
                raise BadInput(f"unknown element {lab!r}", f"$.covers[{i}][{j}]")
        pairs.append((lo, hi))
    if adjoin:
        labels, pairs = adjoin_bottom(labels, pairs)
    try:
        return build_lattice(labels, pairs)
    except LatticeError:
        raise
    except ValueError as exc:
        raise BadInput(str(exc)) from None


def family_from_json(doc: Any) -> SetFamily:
    if not isinstance(doc, dict):
        raise BadInput("expected an object with 'ground' and 'members'")
    ground = _labels(doc, "ground")
    members = doc.get("members")
    if not isinstance(members, list):
        raise BadInput("expected a list of lists", "$.members")
    known = set(ground)
    for i, m in enumerate(members):
        if not isinstance(m, list):
            raise BadInput("expected a list of point labels", f"$.members[{i}]")
        for j, p in enumerate(m):
            if str(p) not in known:
                raise BadInput(f"unknown point {p!r}", f"$.members[{i}][{j}]")
    try:
        return SetFamily.from_labels(ground, members)
    except ValueError as exc:
        raise BadInput(str(exc), "$.members") from None


def load_input(source: Union[str, Path], *, adjoin: bool = False) -> Union[FiniteLattice, SetFamily]:
    """A lattice or a set family, told apart by their keys; fixture names also work."""
    if not Path(source).exists() and str(source) in fixture_names():
        doc = json.loads(_fixture_text(str(source)))
    else:
        doc = load_json(source)
    if isinstance(doc, dict) and "elements" in doc:
        return lattice_from_json(doc, adjoin=adjoin)
    if isinstance(doc, dict) and "ground" in doc:
        return family_from_json(doc)
    raise BadInput("expected a lattice ('elements', 'covers') or a family ('ground', 'members')")


def fixture_names() -> tuple[str, ...]:
    return LATTICE_FIXTURES + FAMILY_FIXTURES


def _fixture_text(name: str) -> str:
    return resources.files("locint.fixtures").joinpath(f"{name}.json").read_text(encoding="utf-8")


def fixture(name: str) -> Union[FiniteLattice, SetFamily]:
    if name not in fixture_names():
        raise KeyError(name)
    doc = json.loads(_fixture_text(name))
    return lattice_from_json(doc) if name in LATTICE_FIXTURES else family_from_json(doc)
