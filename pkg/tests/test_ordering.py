import itertools
import warnings

import pytest
from hypothesis import assume, given, strategies as st

from locint.io import fixture
from locint.oracle import brute_force_order, random_loc_families
from locint.ordering import (
    AmbiguousCase,
    LinearOrder,
    NotCompletelySeparated,
    NotLoc,
    NotSeparating,
    Section,
    Unrealizable,
    altwegg_realize,
    betweenness_of,
    classify_point,
    construct_order,
    extend_step,
    hull_law,
    initial_triple,
    is_consistent,
    order_completely_separated,
    search_extension,
)
from locint.setfam import SetFamily, is_loc_setfamily, separation_profile

from conftest import intersection_closed_families

loc_family = st.integers(0, 10**6).map(lambda s: next(random_loc_families(1, s, max_points=6)))


def quiet(fn, *args, **kw):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return fn(*args, **kw)


def test_altwegg_recovers_a_chain():
    target = LinearOrder((3, 0, 2, 1))
    got = altwegg_realize(betweenness_of(target), range(4))
    assert got.sequence in (target.sequence, target.reversed().sequence)
    assert got == got.canonical()


def test_altwegg_rejects_total_relation():
    # (a b a) must force b = a
    with pytest.raises(Unrealizable) as exc:
        altwegg_realize(lambda a, b, c: True, range(3))
    assert exc.value.postulate == 1


def test_altwegg_rejects_empty_relation():
    with pytest.raises(Unrealizable):
        altwegg_realize(lambda a, b, c: a == b or b == c, range(3))


def test_altwegg_small_inputs():
    assert altwegg_realize(lambda a, b, c: True, []).sequence == ()
    assert altwegg_realize(lambda a, b, c: a == b == c or a == b or b == c, [4]).sequence == (4,)


@given(st.permutations(range(6)))
def test_altwegg_round_trip(perm):
    order = LinearOrder(tuple(perm))
    assert altwegg_realize(betweenness_of(order), range(6)) == order.canonical()


def test_completely_separated_points():
    F = fixture("FAM-FIVE")
    assert order_completely_separated(F, [0, 2, 4]).sequence == (0, 2, 4)
    with pytest.raises(NotCompletelySeparated):
        order_completely_separated(fixture("FAM-CHAIN"), [0, 1])


def test_fixture_orders():
    expect = {"FAM-CHAIN": ["3", "2", "1"], "FAM-INT": ["1", "2", "3"],
              "FAM-FIVE": ["1", "2", "3", "4", "5"], "FAM-CENTER": ["1", "2", "3"]}
    for name, seq in expect.items():
        F = fixture(name)
        built = construct_order(F)
        assert built.order.labels(F.ground) == seq
        assert not built.fallback_used


def test_five_point_classification():
    F = fixture("FAM-FIVE")
    t = initial_triple(F)
    assert t.order.sequence == (0, 2, 4) and t.phi is None
    c2 = classify_point(F, t.order, 1)
    assert c2.type == "I_b"
    assert c2.section == Section((0,), (2, 4))
    c4 = classify_point(F, t.order, 3)
    assert c4.type == "I_c"
    assert c4.section == Section((0, 2), (4,))
    done = extend_step(F, t)
    assert done.complete and done.order.sequence == (0, 1, 2, 3, 4)


def test_center_point_is_exceptional():
    F = fixture("FAM-CENTER")
    t = initial_triple(F)
    c = classify_point(F, t.order, 1)
    assert c.type == "II_a" and c.exceptional
    t1 = extend_step(F, t)
    assert not t1.complete
    assert t1.phi == {1: Section((0,), (2,))}
    t2 = extend_step(F, t1)
    assert t2.complete and t2.order.sequence == (0, 1, 2)


def test_extend_complete_triple_rejected():
    F = fixture("FAM-FIVE")
    done = extend_step(F, initial_triple(F))
    with pytest.raises(ValueError):
        extend_step(F, done)


def test_classify_rejects_ordered_point():
    F = fixture("FAM-FIVE")
    with pytest.raises(ValueError):
        classify_point(F, initial_triple(F).order, 0)


def test_classify_rejects_independent_point():
    F = fixture("FAM-FIVE")
    with pytest.raises(AmbiguousCase):
        classify_point(F, LinearOrder((0, 2)), 4)


def test_section_kinds():
    assert Section.at((1, 2, 3), 0).kind == "extreme"
    assert Section.at((1, 2, 3), 3).kind == "extreme"
    assert Section.at((1, 2, 3), 1).kind == "jump"


def test_construct_rejects_bad_families():
    with pytest.raises(NotLoc) as exc:
        construct_order(fixture("FAM-NONLOC"))
    assert exc.value.verdict.check == "condition 4"
    twins = SetFamily.from_masks(["1", "2"], [0, 3])
    with pytest.raises(NotSeparating):
        construct_order(twins)


def test_is_consistent_examples():
    F = fixture("FAM-INT")
    assert is_consistent(F, [0, 1, 2]) == (True, None)
    ok, wit = is_consistent(F, [0, 2, 1])
    assert not ok and len(wit) == 3
    assert is_consistent(F, LinearOrder((2, 1, 0)))[0]


def test_hull_law_example():
    F = SetFamily.from_masks(["1", "2", "3"], [0, 0b001, 0b100, 0b111])
    assert is_consistent(F, [1, 0, 2])[0]
    assert not hull_law(F, LinearOrder((1, 0, 2)))[0]
    assert hull_law(F, LinearOrder((0, 1, 2)))[0]


def test_search_extension_is_deterministic():
    F = fixture("FAM-FIVE")
    a = search_extension(F, [0, 2, 4], range(5))
    b = search_extension(F, [0, 2, 4], range(5))
    assert a == b and is_consistent(F, a)[0]


@given(loc_family)
def test_constructed_orders_are_consistent(F):
    built = quiet(construct_order, F)
    assert built.order.mask == F.full
    assert is_consistent(F, built.order)[0]
    for m in F.members:
        assert built.order.is_convex(m)
    if built.hull_required:
        assert hull_law(F, built.order)[0]


@given(loc_family)
def test_construction_agrees_with_exhaustive_search(F):
    assert brute_force_order(F) is not None
    assert quiet(construct_order, F).order is not None


@given(intersection_closed_families(max_points=5))
def test_consistency_is_convexity(F):
    for perm in itertools.islice(itertools.permutations(range(F.n)), 24):
        o = LinearOrder(perm)
        assert is_consistent(F, o)[0] == all(o.is_convex(m) for m in F.members)


@given(intersection_closed_families(max_points=5))
def test_loc_separating_families_always_order(F):
    assume(separation_profile(F).separates)
    assume(is_loc_setfamily(F))
    assert is_consistent(F, quiet(construct_order, F).order)[0]
