import pytest
from hypothesis import given

from locint.filters import (
    Filter,
    Ideal,
    Overlap,
    enumerate_filters,
    enumerate_ideals,
    extend_to_semiprime,
    is_completely_separated,
    is_filter,
    is_ideal,
    is_semi_prime,
    is_well_separated,
    semiprime_filters,
)
from locint.lattice import is_loc_lattice
from locint.verdict import SizeGuard

from conftest import corpus, lattices


def names(L, fs):
    return [L.label_set(F.mask) for F in fs]


def test_chain3_filters(CHAIN3):
    assert names(CHAIN3, enumerate_filters(CHAIN3)) == [["b"], ["a", "b"]]
    assert names(CHAIN3, semiprime_filters(CHAIN3)) == [["b"], ["a", "b"]]


def test_b2_filters(B2):
    assert names(B2, enumerate_filters(B2)) == [["1"], ["a", "1"], ["b", "1"]]
    assert names(B2, semiprime_filters(B2)) == [["a", "1"], ["b", "1"]]


def test_m3_semiprime_filters(M3):
    got = sorted(sorted(s) for s in names(M3, semiprime_filters(M3)))
    assert got == [["1", "a"], ["1", "b"], ["1", "c"]]


def test_top_filter_not_semiprime_in_b2(B2):
    ok, (a, b) = is_semi_prime(B2, Filter(B2.up[B2.top]))
    assert not ok
    assert B2.join(a, b) == B2.top


def test_size_guard(N5):
    with pytest.raises(SizeGuard):
        enumerate_filters(N5, max_elements=3)


def test_extension_examples(CHAIN3, B2):
    top = Filter(CHAIN3.up[CHAIN3.top])
    low = Ideal(CHAIN3.down[CHAIN3.bottom])
    assert CHAIN3.label_set(extend_to_semiprime(CHAIN3, top, low).mask) == ["a", "b"]
    G = extend_to_semiprime(B2, Filter(B2.up[B2.top]), Ideal(B2.down[B2.index("b")]))
    assert B2.label_set(G.mask) == ["a", "1"]


def test_extension_overlap(CHAIN3):
    with pytest.raises(Overlap):
        extend_to_semiprime(CHAIN3, Filter(CHAIN3.up[CHAIN3.index("a")]),
                            Ideal(CHAIN3.down[CHAIN3.index("a")]))


def test_extension_rejects_non_filter(CHAIN3):
    with pytest.raises(ValueError):
        extend_to_semiprime(CHAIN3, Filter(1 << CHAIN3.index("a")),
                            Ideal(CHAIN3.down[CHAIN3.bottom]))


def test_well_separated_directions(B2, CHAIN3):
    assert is_well_separated(B2, "lower")[0]
    # in a chain the filter generated by b misses a, which sits below b
    ok, (F, x) = is_well_separated(CHAIN3, "lower")
    assert not ok and CHAIN3.labels[x] == "a"
    assert is_well_separated(CHAIN3, "upper")[0]
    with pytest.raises(ValueError):
        is_well_separated(B2, "sideways")


def test_completely_separated_examples(B2, CHAIN3):
    assert is_completely_separated(B2)[0]
    ok, (F, G) = is_completely_separated(CHAIN3)
    assert not ok and F.mask & G.mask == F.mask


@given(lattices())
def test_filter_enumeration_matches_subsets(L):
    brute_f = sorted(m for m in range(1, 1 << L.n) if is_filter(L, m) and not m >> L.bottom & 1)
    brute_i = sorted(m for m in range(1, 1 << L.n) if is_ideal(L, m) and not m >> L.top & 1)
    assert [F.mask for F in enumerate_filters(L)] == brute_f
    assert [I.mask for I in enumerate_ideals(L)] == brute_i


def _is_filter_by_definition(L, m):
    # proper filters only: 0 is excluded
    xs = [x for x in range(L.n) if m >> x & 1]
    if not xs or L.bottom in xs:
        return False
    up = all(m >> y & 1 for x in xs for y in range(L.n) if L.leq(x, y))
    return up and all(m >> L.meet(a, b) & 1 for a in xs for b in xs)


@given(lattices())
def test_is_filter_definition(L):
    for m in range(1, 1 << L.n):
        assert is_filter(L, m) == _is_filter_by_definition(L, m)


def _semi_prime_alt(L, F):
    """If a∨b ∈ F then a ∈ F, b ∈ F, or F holds some c ≤ a∨b not built from a and b."""
    for a in range(L.n):
        for b in range(L.n):
            if L.join(a, b) not in F or a in F or b in F:
                continue
            ok = any(
                c in F and L.leq(c, L.join(a, b)) and c != L.join(L.meet(a, c), L.meet(b, c))
                for c in range(L.n)
            )
            if not ok:
                return False
    return True


@given(lattices())
def test_semi_prime_two_phrasings_agree(L):
    for F in enumerate_filters(L):
        assert is_semi_prime(L, F)[0] == _semi_prime_alt(L, F)


@given(lattices())
def test_prime_filters_are_semi_prime(L):
    for F in enumerate_filters(L):
        prime = all(a in F or b in F for a in range(L.n) for b in range(L.n) if L.join(a, b) in F)
        if prime:
            assert is_semi_prime(L, F)[0]


@given(lattices())
def test_extension_is_semi_prime_and_avoids_ideal(L):
    for F in enumerate_filters(L):
        for I in enumerate_ideals(L):
            if F.mask & I.mask:
                continue
            G = extend_to_semiprime(L, F, I)
            assert G.mask & F.mask == F.mask
            assert not G.mask & I.mask
            assert is_semi_prime(L, G)[0]


@given(lattices())
def test_semiprime_filters_separate_elements(L):
    space = semiprime_filters(L)
    for a in range(L.n):
        for b in range(L.n):
            if not L.leq(a, b):
                assert any(a in F and b not in F for F in space)


@given(lattices())
def test_upper_reading_always_holds(L):
    assert is_well_separated(L, "upper")[0]


@given(lattices())
def test_lower_reading_means_atom_generators(L):
    atoms = {x for x in range(L.n) if x != L.bottom
             and all(y in (x, L.bottom) for y in range(L.n) if L.leq(y, x))}
    gens = [L.meet_all(F.members()) for F in semiprime_filters(L)]
    assert is_well_separated(L, "lower")[0] == all(g in atoms for g in gens)


@given(lattices())
def test_completely_implies_well(L):
    if is_completely_separated(L)[0]:
        assert is_well_separated(L, "lower")[0]
        assert is_well_separated(L, "upper")[0]


def test_completely_separated_loc_lattices_have_disjoint_meets():
    """On loc lattices, no two semi-prime filters nest exactly when their generators meet at 0."""
    for L in corpus(6):
        if not is_loc_lattice(L):
            continue
        space = semiprime_filters(L)
        gens = [L.meet_all(F.members()) for F in space]
        disjoint = all(L.meet(g, h) == L.bottom for i, g in enumerate(gens) for h in gens[i + 1:])
        assert is_completely_separated(L)[0] == disjoint
