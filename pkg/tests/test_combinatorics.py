import mpmath
import pytest
from hypothesis import given, strategies as st

from hyperlie.combinatorics import (
    Bipartition,
    bipartition,
    bipartitions,
    divisors,
    k_coeff,
    mobius,
    partitions,
    roots_z2,
    signed_roots_z2,
)


# -- independent oracles ----------------------------------------------------


def brute_partitions(n, bound=None):
    """Every weakly decreasing positive sequence summing to n, by recursion."""
    bound = n if bound is None else bound
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, bound), 0, -1):
        out.extend((first,) + rest for rest in brute_partitions(n - first, first))
    return out


def partition_count(n):
    """Coin-style dynamic program, independent of the enumeration code."""
    table = [1] + [0] * n
    for part in range(1, n + 1):
        for total in range(part, n + 1):
            table[total] += table[total - part]
    return table[n]


def test_partition_count_oracle_against_brute_enumeration():
    for n in range(9):
        assert partition_count(n) == len(set(brute_partitions(n)))


# -- partitions ---------------------------------------------------------------


def test_partitions_of_zero():
    assert partitions(0) == ((),)


def test_partitions_frozen_counts():
    assert len(partitions(4)) == 5  # brute_partitions(4) has 5 entries
    assert len(partitions(10)) == 42  # partition_count(10) == 42


def test_partitions_match_oracle_exactly():
    for n in range(9):
        assert list(partitions(n)) == brute_partitions(n)


def test_partitions_descending_lex_order():
    assert partitions(4) == ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
    for n in range(10):
        ps = partitions(n)
        assert all(ps[i] > ps[i + 1] for i in range(len(ps) - 1))


@given(st.integers(min_value=0, max_value=14))
def test_partitions_invariants(n):
    for p in partitions(n):
        assert sum(p) == n
        assert all(p[i] >= p[i + 1] >= 1 for i in range(len(p) - 1))


# -- bipartitions -------------------------------------------------------------


def test_bipartitions_rank_one():
    assert bipartitions(1) == (Bipartition((1,), ()), Bipartition((), (1,)))


def test_bipartitions_counts():
    assert len(bipartitions(2)) == 5
    assert len(bipartitions(10)) == 481
    for n in range(21):
        expected = sum(partition_count(a) * partition_count(n - a) for a in range(n + 1))
        assert len(bipartitions(n)) == expected


def test_bipartitions_no_duplicates_and_sizes():
    for n in range(9):
        bps = bipartitions(n)
        assert len(set(bps)) == len(bps)
        assert all(bp.n == n for bp in bps)


def test_bipartition_counts_view():
    bp = Bipartition((3, 1, 1), (2,))
    assert bp.counts() == {(3, 1): 1, (1, 1): 2, (2, -1): 1}
    assert sum(i * a for (i, _), a in bp.counts().items()) == bp.n


# -- text encoding ------------------------------------------------------------


@pytest.mark.parametrize(
    "bp,text",
    [
        (Bipartition((3, 1), (2, 2)), "[3,1|2,2]"),
        (Bipartition((), (1, 1)), "[|1,1]"),
        (Bipartition((), ()), "[]"),
        (Bipartition((1,), ()), "[1|]"),
    ],
)
def test_encoding_examples(bp, text):
    assert bp.encode() == text
    assert Bipartition.decode(text) == bp


@given(
    st.lists(st.integers(min_value=1, max_value=9), max_size=5),
    st.lists(st.integers(min_value=1, max_value=9), max_size=5),
)
def test_encoding_round_trip(plus, minus):
    bp = bipartition(plus, minus)
    assert Bipartition.decode(bp.encode()) == bp


def test_decode_rejects_garbage():
    for bad in ("", "[1,2", "[1|2|3]", "[a|]"):
        with pytest.raises(ValueError):
            Bipartition.decode(bad)
    with pytest.raises(ValueError):
        bipartition([0], [])


# -- mobius -------------------------------------------------------------------


def test_mobius_values():
    assert mobius(1) == 1
    assert mobius(6) == 1
    assert mobius(12) == 0
    assert [mobius(m) for m in range(1, 11)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1]


def test_mobius_rejects_nonpositive():
    with pytest.raises(ValueError):
        mobius(0)


def test_mobius_divisor_sum():
    for m in range(1, 201):
        total = sum(mobius(e) for e in divisors(m))
        assert total == (1 if m == 1 else 0)


def test_mobius_doubling():
    for e in range(1, 101):
        if e % 2 == 1:
            assert mobius(2 * e) == -mobius(e)
        else:
            assert mobius(2 * e) == 0


def test_mobius_as_primitive_root_sum():
    # sum of the primitive n-th roots of unity, 50-digit working precision
    from math import gcd

    with mpmath.workdps(50):
        for n in range(1, 61):
            total = mpmath.mpc(0)
            for k in range(n):
                if gcd(k, n) == 1:
                    total += mpmath.expjpi(mpmath.mpf(2 * k) / n)
            assert abs(total - mobius(n)) < 1e-6


def test_mobius_half_turn_sums():
    # the three restricted sums over 2n-th roots: odd k, even k, and all k
    # coprime to n give mu(2n), -mu(2n) and 0
    from math import gcd

    with mpmath.workdps(50):
        for n in range(1, 41):
            odd = mpmath.mpc(0)
            even = mpmath.mpc(0)
            for k in range(2 * n):
                if gcd(k, n) != 1:
                    continue
                z = mpmath.expjpi(mpmath.mpf(k) / n)
                if k % 2:
                    odd += z
                else:
                    even += z
            assert abs(odd - mobius(2 * n)) < 1e-6
            assert abs(even + mobius(2 * n)) < 1e-6
            assert abs(odd + even) < 1e-6


# -- the sign-pair coefficient ------------------------------------------------


def case_split_k_coeff(eps, theta, e):
    """The four-case form: independent restatement used as the oracle."""
    if e % 2 == 1:
        if (eps, theta) == (-1, -1):
            return -mobius(e)
        return mobius(e)
    return 2 * mobius(e) if (eps, theta) == (1, 1) else 0


def test_k_coeff_examples():
    assert k_coeff(1, 1, 1) == 1
    assert k_coeff(-1, -1, 2) == 0
    assert k_coeff(1, -1, 1) == 1


def test_k_coeff_matches_case_split():
    for e in range(1, 51):
        for eps in (1, -1):
            for theta in (1, -1):
                assert k_coeff(eps, theta, e) == case_split_k_coeff(eps, theta, e)


def test_k_coeff_rejects_bad_args():
    with pytest.raises(ValueError):
        k_coeff(2, 1, 1)
    with pytest.raises(ValueError):
        k_coeff(1, 1, 0)


# -- two-element group root counts ---------------------------------------------


def test_roots_z2_table():
    assert roots_z2(2, 1) == 2 and roots_z2(2, -1) == 0
    assert roots_z2(3, 1) == 1 and roots_z2(3, -1) == 1
    assert roots_z2(0, 1) == 2 and roots_z2(0, -1) == 0
    assert signed_roots_z2(3, -1) == -1
    assert signed_roots_z2(3, 1) == 1
    assert signed_roots_z2(2, 1) == 0 and signed_roots_z2(2, -1) == 0


def test_roots_z2_brute():
    for h in range(-6, 7):
        for theta in (1, -1):
            roots = [eps for eps in (1, -1) if eps**abs(h) == theta]
            assert roots_z2(h, theta) == len(roots)
            assert signed_roots_z2(h, theta) == sum(roots)


# -- divisors -------------------------------------------------------------------


def test_divisors():
    assert divisors(1) == [1]
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert divisors(-6) == [1, 2, 3, 6]
    with pytest.raises(ValueError):
        divisors(0)


@given(st.integers(min_value=1, max_value=3000))
def test_divisors_brute(k):
    assert divisors(k) == [d for d in range(1, k + 1) if k % d == 0]
