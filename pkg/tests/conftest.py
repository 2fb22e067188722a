import itertools
import os

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from locint.io import fixture
from locint.lattice import FiniteLattice
from locint.oracle import enumerate_lattices
from locint.setfam import SetFamily

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", max_examples=500, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def corpus(max_n: int = 6) -> list[FiniteLattice]:
    return [L for n in range(1, max_n + 1) for L in enumerate_lattices(n)]


def relabel(L: FiniteLattice, perm) -> FiniteLattice:
    """The same lattice with element i moved to index perm[i]."""
    n = L.n
    labels = [None] * n
    leq = [[False] * n for _ in range(n)]
    for i in range(n):
        labels[perm[i]] = L.labels[i]
        for j in range(n):
            leq[perm[i]][perm[j]] = L.leq(i, j)
    return FiniteLattice.from_leq(labels, leq)


@st.composite
def lattices(draw, max_n: int = 6):
    """Enumerated lattices with their elements shuffled, so no test leans on index order."""
    L = draw(st.sampled_from(corpus(max_n)))
    perm = draw(st.permutations(range(L.n)))
    return relabel(L, perm)


@st.composite
def families(draw, max_points: int = 5, max_members: int = 8):
    n = draw(st.integers(1, max_points))
    masks = draw(st.sets(st.integers(0, (1 << n) - 1), min_size=1, max_size=max_members))
    return SetFamily.from_masks([str(i + 1) for i in range(n)], sorted(masks))


@st.composite
def intersection_closed_families(draw, max_points: int = 5):
    """Families closed under ∩ that contain the ground set, hence lattices of sets."""
    F = draw(families(max_points))
    fam = set(F.members) | {F.full}
    grown = True
    while grown:
        grown = False
        for a, b in itertools.combinations(sorted(fam), 2):
            if a & b not in fam:
                fam.add(a & b)
                grown = True
    return SetFamily.from_masks(F.ground, sorted(fam))


@pytest.fixture
def N5():
    return fixture("N5")


@pytest.fixture
def M3():
    return fixture("M3")


@pytest.fixture
def CHAIN3():
    return fixture("CHAIN3")


@pytest.fixture
def B2():
    return fixture("B2")
