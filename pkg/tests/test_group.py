import itertools
import random

import pytest
from hypothesis import given, strategies as st

from hyperlie import backend
from hyperlie.combinatorics import Bipartition, bipartitions
from hyperlie.group import (
    SignedPermutation,
    canonical_rep,
    centralizer_elements,
    centralizer_order,
    class_chi,
    class_chi_prime,
    class_data,
    class_size,
    compose,
    enumerate_group,
    group_order,
    inverse,
    iter_windows,
    longest_element,
    power,
    signed_cycle_type,
    subgroup_member,
)
from hyperlie.limits import BoundExceeded
from hyperlie.rootcount import class_power


@st.composite
def signed_perms(draw, max_n=6):
    n = draw(st.integers(min_value=0, max_value=max_n))
    perm = draw(st.permutations(list(range(1, n + 1))))
    signs = draw(st.lists(st.sampled_from([1, -1]), min_size=n, max_size=n))
    return SignedPermutation(tuple(p * s for p, s in zip(perm, signs)))


# -- arithmetic ---------------------------------------------------------------


def test_power_examples():
    e3 = SignedPermutation.identity(3)
    assert power(e3, 7) == e3
    x = SignedPermutation([2, -1])
    assert power(x, 2) == SignedPermutation([-1, -2])
    assert compose(x, inverse(x)) == SignedPermutation.identity(2)


def test_rank_mismatch_rejected():
    with pytest.raises(ValueError):
        compose(SignedPermutation.identity(2), SignedPermutation.identity(3))


def test_window_validation():
    for bad in ([1, 1], [0, 2], [3, 1]):
        with pytest.raises(ValueError):
            SignedPermutation(bad)


@given(signed_perms(), signed_perms(), signed_perms())
def test_group_axioms(x, y, z):
    if not (x.n == y.n == z.n):
        return
    assert compose(compose(x, y), z) == compose(x, compose(y, z))
    e = SignedPermutation.identity(x.n)
    assert compose(x, e) == x and compose(e, x) == x
    assert compose(x, inverse(x)) == e


@given(signed_perms(), st.integers(min_value=-12, max_value=12))
def test_power_laws(x, k):
    assert power(x, 0) == SignedPermutation.identity(x.n)
    assert power(x, -k) == inverse(power(x, k))
    naive = SignedPermutation.identity(x.n)
    for _ in range(abs(k)):
        naive = compose(x, naive)
    if k >= 0:
        assert power(x, k) == naive
    else:
        assert power(x, k) == inverse(naive)


# -- cycle types --------------------------------------------------------------


def test_cycle_type_examples():
    for n in range(5):
        assert signed_cycle_type(SignedPermutation.identity(n)) == Bipartition((1,) * n, ())
        assert signed_cycle_type(longest_element(n)) == Bipartition((), (1,) * n)
    assert signed_cycle_type(SignedPermutation([2, -1])) == Bipartition((), (2,))


def test_canonical_rep_examples():
    assert canonical_rep(Bipartition((2,), ())) == SignedPermutation([2, 1])
    assert canonical_rep(Bipartition((), (2,))) == SignedPermutation([2, -1])
    assert canonical_rep(Bipartition((1,), (1,))) == SignedPermutation([1, -2])


def test_canonical_rep_round_trip():
    for n in range(7):
        for bp in bipartitions(n):
            assert signed_cycle_type(canonical_rep(bp)) == bp


def test_cycle_type_of_power_is_class_function_of_type():
    for n in range(5):
        for w in iter_windows(n):
            x = SignedPermutation(w)
            bp = signed_cycle_type(x)
            for k in range(13):
                assert signed_cycle_type(power(x, k)) == class_power(bp, k)


# -- class data ---------------------------------------------------------------


def test_class_data_examples():
    d = class_data(Bipartition((1,), ()))
    assert d.centralizer_order == 2 and d.class_size == 1
    d = class_data(Bipartition((), (2,)))
    assert d.centralizer_order == 4 and d.class_size == 2
    d = class_data(Bipartition((1, 1), ()))
    assert d.chi == 1 and d.chi_prime == 1


def test_class_sizes_by_exhaustive_grouping():
    for n in range(6):
        found = {}
        for w in iter_windows(n):
            bp = Bipartition(*backend.cycle_type(w))
            found[bp] = found.get(bp, 0) + 1
        assert found == {bp: class_size(bp) for bp in bipartitions(n)}
        assert sum(found.values()) == group_order(n)


def test_class_size_centralizer_product():
    for n in range(7):
        for bp in bipartitions(n):
            assert class_size(bp) * centralizer_order(bp) == group_order(n)


# -- enumeration --------------------------------------------------------------


def test_enumeration_counts():
    assert len(list(enumerate_group(0))) == 1
    assert len(list(enumerate_group(2))) == 8
    assert sum(1 for _ in enumerate_group(6)) == 46080


def test_enumeration_bound():
    with pytest.raises(BoundExceeded) as exc:
        list(enumerate_group(9))
    assert "group-enum" in str(exc.value)


def test_enumeration_no_duplicates():
    for n in range(5):
        ws = list(iter_windows(n))
        assert len(set(ws)) == len(ws) == group_order(n)


# -- centralizers -------------------------------------------------------------


def test_centralizer_examples():
    assert len(list(centralizer_elements(SignedPermutation.identity(2)))) == 8
    x = SignedPermutation([2, -1])
    cent = set(centralizer_elements(x))
    assert cent == {power(x, k) for k in range(4)}
    assert len(list(centralizer_elements(SignedPermutation([2, 1])))) == 4


def test_centralizer_size_matches_class_data():
    for n in range(5):
        for bp in bipartitions(n):
            x = canonical_rep(bp)
            assert len(list(centralizer_elements(x))) == centralizer_order(bp)


def test_centralizer_is_subgroup():
    for n in range(5):
        for bp in bipartitions(n):
            cent = set(centralizer_elements(canonical_rep(bp)))
            for a in cent:
                assert inverse(a) in cent
            sample = list(cent)[:12]
            for a in sample:
                for b in sample:
                    assert compose(a, b) in cent


def test_centralizer_bound():
    with pytest.raises(BoundExceeded):
        list(centralizer_elements(SignedPermutation.identity(7)))


# -- linear characters ----------------------------------------------------------


def test_chi_characters_are_homomorphisms():
    rng = random.Random(42)
    for n in range(2, 7):
        windows = [tuple(rng.choice([1, -1]) * p for p in rng.sample(range(1, n + 1), n)) for _ in range(200)]
        elements = [SignedPermutation(w) for w in windows]
        for _ in range(10_000):
            x = rng.choice(elements)
            y = rng.choice(elements)
            xy = compose(x, y)
            assert xy.chi() == x.chi() * y.chi()
            assert xy.chi_prime() == x.chi_prime() * y.chi_prime()


def test_chi_characters_are_class_functions():
    for n in range(5):
        for w in iter_windows(n):
            x = SignedPermutation(w)
            bp = signed_cycle_type(x)
            assert x.chi() == class_chi(bp)
            assert x.chi_prime() == class_chi_prime(bp)


# -- subgroup membership ---------------------------------------------------------


def test_longest_element_in_rotation_subgroup_iff_even_rank():
    for n in range(1, 7):
        assert subgroup_member(longest_element(n), "D") == (n % 2 == 0)


def test_subgroup_member_examples():
    x = SignedPermutation([-1, 2])
    assert not subgroup_member(x, "D")
    assert subgroup_member(x, "Z2A")
    y = SignedPermutation([2, 1])
    assert subgroup_member(y, "D")
    assert not subgroup_member(y, "Z2A")


def test_subgroup_indices():
    for n in range(2, 6):
        counts = {"D": 0, "Z2A": 0, "AB": 0, "AD": 0}
        total = 0
        for w in iter_windows(n):
            x = SignedPermutation(w)
            total += 1
            for sub in counts:
                counts[sub] += subgroup_member(x, sub)
        assert counts["D"] == counts["Z2A"] == counts["AB"] == total // 2
        assert counts["AD"] == total // 4


# -- backend twins ----------------------------------------------------------------


def test_kernel_backends_agree():
    try:
        from hyperlie import _windows_cy as cy
    except ImportError:
        pytest.skip("compiled kernels not built")
    from hyperlie import _windows_py as py

    rng = random.Random(7)
    for n in range(7):
        for _ in range(50):
            perm = rng.sample(range(1, n + 1), n)
            w = tuple(rng.choice([1, -1]) * p for p in perm)
            v = tuple(rng.choice([1, -1]) * p for p in rng.sample(range(1, n + 1), n))
            assert cy.compose(w, v) == py.compose(w, v)
            assert cy.inverse(w) == py.inverse(w)
            assert cy.cycle_type(w) == py.cycle_type(w)
            assert cy.window_chi(w) == py.window_chi(w)
            assert cy.window_chi_prime(w) == py.window_chi_prime(w)
            for k in (-5, -1, 0, 1, 2, 3, 12):
                assert cy.power(w, k) == py.power(w, k)


def test_window_text_round_trip():
    x = SignedPermutation([2, -1, 3])
    assert x.encode() == "[2,-1,3]"
    assert SignedPermutation.from_text("[2,-1,3]") == x


def test_iter_windows_matches_product_construction():
    for n in range(4):
        expected = set()
        for perm in itertools.permutations(range(1, n + 1)):
            for signs in itertools.product([1, -1], repeat=n):
                expected.add(tuple(p * s for p, s in zip(perm, signs)))
        assert set(iter_windows(n)) == expected
