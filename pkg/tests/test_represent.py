import dataclasses
import warnings

import pytest
from hypothesis import given, strategies as st

from locint.lattice import is_loc_lattice
from locint.oracle import sample_interval_sublattice
from locint.ordering import LinearOrder, NotLoc
from locint.represent import (
    co,
    open_interval_check,
    represent_intervals,
    verify_faithful,
    verify_representation,
)

from conftest import lattices


def test_hull_of_masks():
    order = LinearOrder((2, 0, 1, 3))
    assert co(order, 0) == 0
    assert co(order, 0b0100 | 0b0010) == 0b0111
    assert co(order, 0b1000) == 0b1000


def test_n5_images(N5):
    R = represent_intervals(N5)
    assert R.positions(N5.index("a")) == [0]
    assert R.positions(N5.index("c")) == [0, 1]
    assert R.positions(N5.index("b")) == [2]
    assert R.faithful_checked
    doc = R.to_json(N5)
    assert doc["image"]["0"] == [] and doc["faithful"] is True
    assert len(doc["ground_order"]) == 3


def test_m3_is_refused(M3):
    with pytest.raises(NotLoc) as exc:
        represent_intervals(M3)
    assert exc.value.verdict.check == "condition 2"


def test_chain_lower_reading_is_not_faithful(CHAIN3):
    # the chain fails the lower reading, so no faithfulness claim is made
    R = represent_intervals(CHAIN3, ws_direction="lower")
    assert verify_representation(CHAIN3, R)
    assert not R.faithful_checked


def test_broken_image_is_caught(N5):
    R = represent_intervals(N5)
    image = list(R.image)
    image[N5.index("c")] = image[N5.index("a")] | image[N5.index("b")]
    bad = dataclasses.replace(R, image=tuple(image))
    v = verify_representation(N5, bad)
    assert not v and v.check == "convexity"


def test_construction_bookkeeping(N5):
    got = []
    represent_intervals(N5, construction=got)
    assert len(got) == 1 and got[0].order == represent_intervals(N5).ground_order


def test_open_interval_forms(N5):
    R = represent_intervals(N5)
    for x in range(N5.n):
        assert open_interval_check(R, x, N5)
    one_point = dataclasses.replace(R, ground_order=LinearOrder((0,)), image=(0, 1))
    assert not open_interval_check(one_point, 0)
    assert open_interval_check(one_point, 1)


@given(lattices())
def test_loc_lattices_represent(L):
    if not is_loc_lattice(L):
        return
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        R = represent_intervals(L)
    assert verify_representation(L, R)
    assert verify_faithful(L, R)
    assert R.faithful_checked


@given(st.integers(1, 7), st.integers(0, 10**6))
def test_interval_samples_are_faithful_as_given(n, seed):
    L, R = sample_interval_sublattice(n, seed)
    assert verify_representation(L, R)
    assert verify_faithful(L, R)
