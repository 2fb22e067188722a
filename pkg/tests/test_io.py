import json

import pytest

from locint.io import BadInput, family_from_json, fixture, fixture_names, lattice_from_json, load_input
from locint.lattice import FiniteLattice, NotALattice
from locint.setfam import SetFamily


def test_every_fixture_loads():
    for name in fixture_names():
        obj = fixture(name)
        assert isinstance(obj, (FiniteLattice, SetFamily))
    with pytest.raises(KeyError):
        fixture("NOPE")


def test_load_by_name_and_path(tmp_path):
    p = tmp_path / "fam.json"
    p.write_text(json.dumps({"ground": ["x", "y"], "members": [[], ["x"], ["x", "y"]]}))
    F = load_input(str(p))
    assert F.ground == ("x", "y") and len(F.members) == 3
    assert isinstance(load_input("N5"), FiniteLattice)


def test_lattice_json_roundtrip(N5):
    again = lattice_from_json(N5.to_json())
    assert again.up == N5.up and again.labels == N5.labels


@pytest.mark.parametrize("doc, where", [
    ([], "$"),
    ({"elements": "abc", "covers": []}, "$.elements"),
    ({"elements": ["0", True], "covers": []}, "$.elements[1]"),
    ({"elements": ["0", "0"], "covers": []}, "$.elements"),
    ({"elements": ["0", "a"], "covers": {}}, "$.covers"),
    ({"elements": ["0", "a"], "covers": [["0"]]}, "$.covers[0]"),
    ({"elements": ["0", "a"], "covers": [["0", "a"], ["a", "z"]]}, "$.covers[1][1]"),
])
def test_lattice_errors_are_located(doc, where):
    with pytest.raises(BadInput) as exc:
        lattice_from_json(doc)
    assert exc.value.location == where


@pytest.mark.parametrize("doc, where", [
    ({"ground": ["1"], "members": "x"}, "$.members"),
    ({"ground": ["1"], "members": ["1"]}, "$.members[0]"),
    ({"ground": ["1"], "members": [["2"]]}, "$.members[0][0]"),
    ({"ground": ["1"], "members": [["1"], ["1"]]}, "$.members"),
])
def test_family_errors_are_located(doc, where):
    with pytest.raises(BadInput) as exc:
        family_from_json(doc)
    assert exc.value.location == where


def test_structural_errors_pass_through():
    doc = {"elements": ["0", "a", "b", "c", "d"],
           "covers": [["0", "a"], ["0", "b"], ["a", "c"], ["a", "d"], ["b", "c"], ["b", "d"]]}
    with pytest.raises(NotALattice):
        lattice_from_json(doc)


def test_bad_json_location(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text('{"ground": [1,\n')
    with pytest.raises(BadInput) as exc:
        load_input(str(p))
    assert exc.value.location.startswith(str(p) + ":")


def test_unknown_shape(tmp_path):
    p = tmp_path / "odd.json"
    p.write_text('{"nodes": []}')
    with pytest.raises(BadInput):
        load_input(str(p))


def test_adjoin_bottom_from_json():
    doc = {"elements": ["x", "y", "t"], "covers": [["x", "t"], ["y", "t"]]}
    L = lattice_from_json(doc, adjoin=True)
    assert L.n == 4
