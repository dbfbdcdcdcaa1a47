"""Named verification suites.

Each suite mechanically checks one identity of the library at desk scale and
returns a list of failure witnesses (empty = pass).  Suites iterate in
increasing (n, k, class) order, so the first witness is minimal.  The CLI
`verify` subcommand and the acceptance tests both run these.
"""

from __future__ import annotations

import random
from typing import Callable

from . import chartables, hlc, rootcount, series
from .combinatorics import Bipartition, bipartitions
from .rootcount import TWISTS

ORACLE_KSET = (0, 1, 2, 3, 4, 5, 6, 8, 12)
GF_KSET = (1, 2, 3, 4, 6, 12)


def _clamp(n_max: int | None, default: int) -> int:
    return default if n_max is None else min(n_max, default) if n_max >= 0 else default


def suite_oracle(n_max: int | None = None) -> list[str]:
    """Class-level enumerators equal literal element counts, all twists."""
    bad = []
    for n in range(_clamp(n_max, 6) + 1):
        for k in ORACLE_KSET:
            for twist in TWISTS:
                a = rootcount.root_enumerator(n, k, twist)
                b = rootcount.brute_force_root_enumerator(n, k, twist)
                for mu in bipartitions(n):
                    if a.values[mu] != b.values[mu]:
                        bad.append(
                            f"n={n} k={k} twist={twist} class={mu.encode()}: "
                            f"{a.values[mu]} != {b.values[mu]}"
                        )
    return bad


def _gf_suite(twists: tuple[str, ...], n_max: int | None) -> list[str]:
    bad = []
    top = _clamp(n_max, 8)
    for k in GF_KSET:
        for twist in twists:
            full = series._gf_exp(k, twist, top)
            for n in range(top + 1):
                got = series.coefficients_to_classfunction(full, n)
                want = rootcount.root_enumerator(n, k, twist)
                for mu in bipartitions(n):
                    if got.values[mu] != want.values[mu]:
                        bad.append(
                            f"n={n} k={k} twist={twist} class={mu.encode()}: "
                            f"series {got.values[mu]} != {want.values[mu]}"
                        )
    return bad


def suite_b_roots(n_max: int | None = None) -> list[str]:
    """Exponential generating function for plain root counts."""
    return _gf_suite(("1",), n_max)


def suite_b_signed(n_max: int | None = None) -> list[str]:
    """Exponential generating function for sign-twisted root counts."""
    return _gf_suite(("chi",), n_max)


def suite_index2_gf(n_max: int | None = None) -> list[str]:
    """Generating functions for the other two linear twists."""
    return _gf_suite(("chiP", "chichiP"), n_max)


def suite_hlc_gf(n_max: int | None = None) -> list[str]:
    """Centralizer-sum character values equal series-extracted values."""
    bad = []
    for n in range(_clamp(n_max, 4) + 1):
        for lam in bipartitions(n):
            brute = hlc.psi_bruteforce_classfunction(lam)
            for mu in bipartitions(n):
                exact = series.psi_from_series(lam, mu)
                if brute.values[mu] != exact:
                    bad.append(
                        f"lam={lam.encode()} mu={mu.encode()}: brute {brute.values[mu]} != {exact}"
                    )
    if (n_max is None or n_max >= 5) and not bad:
        rng = random.Random(271828)
        labels = bipartitions(5)
        for _ in range(200):
            lam = rng.choice(labels)
            mu = rng.choice(labels)
            b = hlc.psi_bruteforce(lam, mu)
            s = series.psi_from_series(lam, mu)
            if b != s:
                bad.append(f"lam={lam.encode()} mu={mu.encode()}: brute {b} != {s}")
    return bad


def _identity_suite(signed: bool, n_max: int | None) -> list[str]:
    bad = []
    twist = "chi" if signed else "1"
    agg = hlc.spsi_k_sum if signed else hlc.psi_k_sum
    for n in range(_clamp(n_max, 6) + 1):
        for k in range(0, 13):
            got = agg(n, k)
            want = rootcount.root_enumerator(n, k, twist)
            for mu in bipartitions(n):
                if got.values[mu] != want.values[mu]:
                    bad.append(
                        f"n={n} k={k} class={mu.encode()}: {got.values[mu]} != {want.values[mu]}"
                    )
    return bad


def suite_b_identity(n_max: int | None = None) -> list[str]:
    """Root counts equal the higher-Lie character sums."""
    return _identity_suite(False, n_max)


def suite_b_signed_identity(n_max: int | None = None) -> list[str]:
    """Sign-twisted root counts equal the signed character sums."""
    return _identity_suite(True, n_max)


def suite_d_half(n_max: int | None = None) -> list[str]:
    bad = []
    for n in range(1, _clamp(n_max, 8) + 1):
        for k in range(0, 13):
            bad.extend(hlc.dn_half_sum_mismatches(n, k))
    return bad


def suite_d_odd(n_max: int | None = None) -> list[str]:
    bad = []
    for n in range(1, _clamp(n_max, 7) + 1):
        if n % 2 == 1:
            ks = range(0, 13)  # odd rank: every k
        elif n <= _clamp(n_max, 6):
            ks = range(1, 12, 2)  # even rank: odd k only
        else:
            ks = range(0)
        for k in ks:
            bad.extend(hlc.dn_odd_mismatches(n, k))
    return bad


def suite_a_scharf(n_max: int | None = None) -> list[str]:
    bad = []
    for n in range(_clamp(n_max, 6) + 1):
        for k in range(1, 9):
            if not hlc.scharf_check(n, k):
                bad.append(f"n={n} k={k}: symmetric-group root/character sum mismatch")
    return bad


def suite_orthogonality(n_max: int | None = None) -> list[str]:
    bad = []
    for n in range(1, _clamp(n_max, 8) + 1):
        for mk, table in (("S", chartables.sn_table(n)), ("B", chartables.bn_table(n))):
            for line in chartables.verify_orthogonality(table):
                bad.append(f"{mk} n={n}: {line}")
    return bad


def suite_fs(n_max: int | None = None) -> list[str]:
    bad = []
    for n in range(1, _clamp(n_max, 6) + 1):
        bad.extend(chartables.fs_mismatches(n))
    return bad


def suite_gelfand_b(n_max: int | None = None) -> list[str]:
    return [
        f"n={n}: involution character sum is not multiplicity-free"
        for n in range(1, _clamp(n_max, 6) + 1)
        if not chartables.gelfand_check_B(n)
    ]


def suite_gelfand_d(n_max: int | None = None) -> list[str]:
    return [
        f"n={n}: rotation-subgroup double model failed"
        for n in range(2, _clamp(n_max, 6) + 1)
        if not chartables.gelfand_check_D(n)
    ]


def suite_predicates(n_max: int | None = None) -> list[str]:
    """Divisibility predicates match the class-level power map exactly."""
    bad = []
    for n in range(_clamp(n_max, 8) + 1):
        identity = Bipartition((1,) * n, ())
        w0_class = Bipartition((), (1,) * n)
        for lam in bipartitions(n):
            for k in range(0, 13):
                power = rootcount.class_power(lam, k)
                if hlc.divides_k(lam, k) != (power == identity):
                    bad.append(f"n={n} k={k} lam={lam.encode()}: trivial-power predicate")
                if hlc.divides_k_minus(lam, k) != (power == w0_class):
                    bad.append(f"n={n} k={k} lam={lam.encode()}: longest-element predicate")
    return bad


def suite_properness(n_max: int | None = None) -> list[str]:
    bad = []
    for n in range(1, _clamp(n_max, 7) + 1):
        for rep in chartables.properness_sweep("B", n, range(0, 13)):
            if rep.verdict != "proper":
                bad.append(f"B n={n} k={rep.meta['k']}: {rep.negative_witnesses[:3]}")
        for rep in chartables.properness_sweep("D", n, range(0, 13)):
            if rep.verdict != "proper":
                bad.append(f"D n={n} k={rep.meta['k']}: {rep.negative_witnesses[:3]}")
    return bad


def suite_counterexample(n_max: int | None = None) -> list[str]:
    """Rank-10 alternating subgroup: k = 10 and 70 fail, odd k hold."""
    del n_max  # fixed-size reproduction
    bad = []
    for k in (10, 70):
        f = rootcount.subgroup_root_enumerator(10, k, "AB")
        rep = chartables.subgroup_multiplicities(f, "chichiP", k=k)
        if rep.verdict != "not-proper":
            bad.append(f"AB n=10 k={k}: expected a negative constituent, found none")
    for k in (3, 5, 7):
        f = rootcount.subgroup_root_enumerator(10, k, "AB")
        rep = chartables.subgroup_multiplicities(f, "chichiP", k=k)
        if rep.verdict != "proper":
            bad.append(f"AB n=10 k={k}: {rep.negative_witnesses[:3]}")
    return bad


SUITES: dict[str, Callable[[int | None], list[str]]] = {
    "oracle": suite_oracle,
    "B-roots": suite_b_roots,
    "B-signed": suite_b_signed,
    "index2-gf": suite_index2_gf,
    "hlc-gf": suite_hlc_gf,
    "B-identity": suite_b_identity,
    "B-signed-identity": suite_b_signed_identity,
    "D-half": suite_d_half,
    "D-odd": suite_d_odd,
    "A-scharf": suite_a_scharf,
    "orthogonality": suite_orthogonality,
    "fs": suite_fs,
    "gelfand-B": suite_gelfand_b,
    "gelfand-D": suite_gelfand_d,
    "predicates": suite_predicates,
    "properness": suite_properness,
    "counterexample": suite_counterexample,
}


def run_suite(name: str, n_max: int | None = None) -> list[str]:
    if name == "all":
        bad = []
        for suite_name, fn in SUITES.items():
            bad.extend(f"[{suite_name}] {line}" for line in fn(n_max))
        return bad
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; known: {', '.join([*SUITES, 'all'])}")
    return SUITES[name](n_max)
