import itertools

import pytest
from hypothesis import given

from locint.lattice import (
    CyclicCovers,
    NoBottom,
    NotALattice,
    accessibility,
    adjoin_bottom,
    build_lattice,
    internal_elements,
    is_interlocking,
    is_loc_lattice,
)
from locint.io import fixture

from conftest import corpus, lattices


def L_(L, *labels):
    return [L.index(x) for x in labels]


def test_chain3_meet_join(CHAIN3):
    a, b = L_(CHAIN3, "a", "b")
    assert CHAIN3.meet(a, b) == a
    assert CHAIN3.join(a, b) == b
    assert CHAIN3.bottom == CHAIN3.index("0")


def test_m3_is_a_diamond(M3):
    a, b, c, top = L_(M3, "a", "b", "c", "1")
    for x, y in itertools.combinations([a, b, c], 2):
        assert M3.join(x, y) == top
        assert M3.meet(x, y) == M3.bottom


def test_two_maximal_elements_rejected():
    with pytest.raises((NoBottom, NotALattice)):
        build_lattice(["x", "y"], [])


def test_missing_least_upper_bound():
    covers = [("0", "a"), ("0", "b"), ("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")]
    with pytest.raises(NotALattice):
        build_lattice(["0", "a", "b", "c", "d"], covers)


def test_cycle_rejected():
    with pytest.raises(CyclicCovers):
        build_lattice(["0", "a", "b"], [("0", "a"), ("a", "b"), ("b", "a")])


def test_unknown_label_in_cover():
    with pytest.raises(ValueError):
        build_lattice(["0", "a"], [("0", "z")])


def test_adjoin_bottom_makes_a_lattice():
    labels, covers = adjoin_bottom(["x", "y", "t"], [("x", "t"), ("y", "t")])
    L = build_lattice(labels, covers)
    assert L.n == 4
    assert L.labels[L.bottom] == "⊥"


def test_internal_elements_examples(CHAIN3, M3, N5):
    a, b = L_(CHAIN3, "a", "b")
    assert internal_elements(CHAIN3, a, b).internal == 0
    a, b, c = L_(M3, "a", "b", "c")
    res = internal_elements(M3, a, b)
    assert M3.label_set(res.internal) == ["c"]
    assert set(M3.label_set(res.closed)) == {"a", "b", "c"}
    a, b = L_(N5, "a", "b")
    assert N5.label_set(internal_elements(N5, a, b).internal) == ["c"]


def test_internal_elements_index_check(CHAIN3):
    with pytest.raises(IndexError):
        internal_elements(CHAIN3, 0, 7)


def test_loc_examples(CHAIN3, M3, N5):
    assert is_loc_lattice(CHAIN3).is_loc
    assert is_loc_lattice(N5).is_loc
    v = is_loc_lattice(M3)
    assert not v.is_loc
    assert v.violated_condition == 2
    assert [M3.labels[x] for x in v.witness] == ["a", "b", "c"]


def test_accessibility_examples(CHAIN3, B2):
    assert not accessibility(CHAIN3, CHAIN3.index("a")).accessible_above
    assert accessibility(B2, B2.index("0")).accessible_above
    assert accessibility(B2, B2.index("1")).accessible_below


def test_interlocking_examples(CHAIN3, B2):
    assert is_interlocking(CHAIN3) == (True, None)
    ok, w = is_interlocking(B2)
    assert not ok and B2.labels[w] == "0"
    # with the empty join counted, 0 becomes accessible from below too
    assert is_interlocking(B2, empty_witnesses=True)[0]
    one = build_lattice(["0"], [])
    assert is_interlocking(one)[0]


@given(lattices())
def test_lattice_laws(L):
    for a in range(L.n):
        for b in range(L.n):
            assert L.meet(a, b) == L.meet(b, a)
            assert L.join(a, b) == L.join(b, a)
            assert L.meet(a, L.join(a, b)) == a
            assert L.join(a, L.meet(a, b)) == a
            assert L.leq(L.meet(a, b), a) and L.leq(a, L.join(a, b))
    assert all(L.leq(L.bottom, x) for x in range(L.n))


@given(lattices())
def test_comparable_pairs_have_no_internal_elements(L):
    for a in range(L.n):
        for b in range(L.n):
            if L.comparable(a, b):
                assert internal_elements(L, a, b).internal == 0


@given(lattices())
def test_internal_masks_match_scan(L):
    for a in range(L.n):
        for b in range(L.n):
            assert L.internal_masks[a][b] == internal_elements(L, a, b).internal


@given(lattices())
def test_loc_overlapping_pairs_have_no_internal_elements(L):
    if not is_loc_lattice(L):
        return
    for a in range(L.n):
        for b in range(L.n):
            if L.meet(a, b) != L.bottom:
                assert internal_elements(L, a, b).internal == 0


def _loc_reference(L):
    """Literal restatement of the three conditions, written independently."""
    E = range(L.n)
    le, j, m = L.leq, L.join, L.meet

    def cond1(a, b, x):
        return le(a, j(b, x)) or le(b, j(a, x)) or le(x, j(a, b))

    def cond2(a, b, x):
        incomparable = not L.comparable(a, b) and not L.comparable(a, x) and not L.comparable(b, x)
        if incomparable and le(x, j(a, b)):
            return m(j(a, x), j(b, x)) == x
        return True

    def cond3(a, b, x):
        if le(x, j(a, b)) and m(a, x) != L.bottom and m(b, x) != L.bottom:
            return j(m(a, x), m(b, x)) == x
        return True

    return all(c(a, b, x) for a in E for b in E for x in E for c in (cond1, cond2, cond3))


def test_loc_double_implementation_on_corpus():
    for L in corpus(6):
        assert is_loc_lattice(L).is_loc == _loc_reference(L)


@given(lattices())
def test_loc_double_implementation_shuffled(L):
    assert is_loc_lattice(L).is_loc == _loc_reference(L)


@given(lattices())
def test_loc_verdict_shape(L):
    v = is_loc_lattice(L)
    assert (v.violated_condition is None) == (v.witness is None) == v.is_loc


def test_fixture_roundtrip(N5):
    again = build_lattice(N5.labels, N5.cover_labels())
    assert again.up == N5.up
