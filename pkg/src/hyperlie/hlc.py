"""Higher Lie characters of types A, B and D.

For an element x of signed cycle type lam, the centralizer Z(x) is a direct
product over the (length i, sign eps) blocks of wreath products G_{i,eps} wr
S_a, where G_{i,+} is (order-2) x (cyclic of order i) and G_{i,-} is cyclic
of order 2i generated by the negative cycle itself.  The block linear
character is trivial on the wreathing symmetric group and on the order-2
factor, and evaluates a chosen primitive root of unity on the cyclic factor;
psi^lam is the induction of the tensor product of these to the whole group.

Two evaluation routes:

* `psi_bruteforce` walks the centralizer of a canonical representative,
  reads each commuting element's wreath-cycle holonomies off an address
  table, and sums roots of unity in high-precision complex arithmetic with a
  1e-6 rounding assertion;
* `series.psi_from_series` extracts exact values from the two-alphabet
  generating function and cross-validates every brute-force value.

The aggregates psi_k (over cycle types whose k-th power is the identity) and
the signed variant (k-th power equal to the longest element) are computed
from the specialized series and, at small rank, recomputed per cycle type
and compared; a mismatch is a hard error.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterator

import mpmath

from . import backend, series
from .combinatorics import Bipartition, Partition, bipartitions, partitions
from .group import canonical_rep, class_chi, class_size, iter_windows
from .limits import check
from .rootcount import (
    ClassFunction,
    root_enumerator_S,
    s_class_size,
    subgroup_root_enumerator,
)

OMEGA_DPS = 50
OMEGA_TOL = 1e-6

#: aggregates are recomputed per cycle type and compared up to this rank
PSI_COMPARE_BOUND = 6


def divides_k(bp: Bipartition, k: int) -> bool:
    """Whether elements of cycle type bp have trivial k-th power.

    Positive parts must divide |k|; negative parts must divide |k| with even
    quotient.  k = 0 accepts everything (x^0 = 1).
    """
    a = abs(k)
    if a == 0:
        return True
    for i in bp.plus:
        if a % i != 0:
            return False
    for i in bp.minus:
        if a % i != 0 or (a // i) % 2 != 0:
            return False
    return True


def divides_k_minus(bp: Bipartition, k: int) -> bool:
    """Whether the k-th power of cycle type bp is the longest element.

    Requires no positive parts, and every negative part to divide |k| with
    odd quotient.  (The empty bipartition qualifies for every k: in rank 0
    the identity and the longest element coincide.)
    """
    a = abs(k)
    if bp.plus:
        return False
    for i in bp.minus:
        if a == 0 or a % i != 0 or (a // i) % 2 != 1:
            return False
    return True


def vdash_types(n: int, k: int, signed: bool = False) -> tuple[Bipartition, ...]:
    pred = divides_k_minus if signed else divides_k
    return tuple(bp for bp in bipartitions(n) if pred(bp, k))


# ---------------------------------------------------------------------------
# brute-force evaluation on the signed group


class _Block:
    """One (length, sign) block of a canonical representative."""

    __slots__ = ("length", "sign", "bases")

    def __init__(self, length: int, sign: int, bases: list[int]):
        self.length = length
        self.sign = sign
        self.bases = bases


def _canonical_frame(bp: Bipartition):
    """Blocks and the symbol address table of the canonical representative.

    For a positive cycle with base point p, the signed symbol delta * (p+t)
    has address (cycle, t, delta); for a negative cycle, p+t has address
    (cycle, t) and -(p+t) has address (cycle, t+i), matching the powers of
    the cycle as a generator of its own centralizer factor.
    """
    blocks: list[_Block] = []
    addr: dict[int, tuple] = {}
    start = 1
    items = [(i, 1) for i in bp.plus] + [(i, -1) for i in bp.minus]
    by_key: dict[tuple[int, int], _Block] = {}
    for length, sign in items:
        key = (length, sign)
        block = by_key.get(key)
        if block is None:
            block = _Block(length, sign, [])
            by_key[key] = block
            blocks.append(block)
        r = len(block.bases)
        block.bases.append(start)
        bi = blocks.index(block)
        for t in range(length):
            s = start + t
            if sign == 1:
                addr[s] = (bi, r, t, 1)
                addr[-s] = (bi, r, t, -1)
            else:
                addr[s] = (bi, r, t)
                addr[-s] = (bi, r, t + length)
        start += length
    return blocks, addr


def _omega_phase(z: tuple[int, ...], blocks, addr, units=None) -> Fraction:
    """Phase (in full turns) of omega at a centralizer element z.

    Follows z through the block cycles: mapping base point r to position t of
    cycle sigma(r) contributes t to the holonomy of the wreath cycle through
    r; each wreath cycle of a positive (resp. negative) block of length i
    adds holonomy/i (resp. holonomy/(2i)) turns.  `units` optionally picks a
    different primitive root per block length.
    """
    phase = Fraction(0)
    apply_w = backend.apply_window
    for bi, block in enumerate(blocks):
        a = len(block.bases)
        sigma = [0] * a
        kval = [0] * a
        for r, p in enumerate(block.bases):
            v = apply_w(z, p)
            cell = addr[v]
            if cell[0] != bi:
                raise AssertionError("centralizer element mixes distinct blocks")
            sigma[r] = cell[1]
            kval[r] = cell[2]
        modulus = block.length if block.sign == 1 else 2 * block.length
        unit = 1 if units is None else units(modulus)
        done = [False] * a
        for r0 in range(a):
            if done[r0]:
                continue
            total = 0
            r = r0
            while not done[r]:
                done[r] = True
                total += kval[r]
                r = sigma[r]
            phase += Fraction(unit * total, modulus)
    return phase - int(phase)


def _centralizer_windows(xw: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    compose = backend.compose
    for w in iter_windows(len(xw)):
        if compose(w, xw) == compose(xw, w):
            yield w


def _phase_sum_to_int(phase_counts: dict[Fraction, int], scale: Fraction) -> int:
    """Evaluate scale * sum of counted unit-circle points and round to an integer."""
    with mpmath.workdps(OMEGA_DPS):
        total = mpmath.mpc(0)
        for phase, count in phase_counts.items():
            total += count * mpmath.expjpi(2 * mpmath.mpf(phase.numerator) / phase.denominator)
        total *= mpmath.mpf(scale.numerator) / scale.denominator
        nearest = int(mpmath.nint(total.real))
        err = abs(total - nearest)
        if err > OMEGA_TOL:
            raise AssertionError(f"omega sum {total} is {err} away from an integer")
    return nearest


@lru_cache(maxsize=None)
def _psi_brute_row(lam: Bipartition, units_tag: str = "first") -> dict[Bipartition, int]:
    """All values of psi^lam by centralizer summation (one centralizer walk)."""
    n = lam.n
    check("psi_brute", n)
    units = None if units_tag == "first" else (lambda m: m - 1 if m > 2 else 1)
    x = canonical_rep(lam).window
    blocks, addr = _canonical_frame(lam)
    cycle_type = backend.cycle_type
    counts: dict[Bipartition, dict[Fraction, int]] = {}
    for z in _centralizer_windows(x):
        mu = Bipartition(*cycle_type(z))
        phase = _omega_phase(z, blocks, addr, units)
        bucket = counts.setdefault(mu, {})
        bucket[phase] = bucket.get(phase, 0) + 1
    size_lam = class_size(lam)
    values: dict[Bipartition, int] = {}
    for mu in bipartitions(n):
        bucket = counts.get(mu)
        if not bucket:
            values[mu] = 0
            continue
        values[mu] = _phase_sum_to_int(bucket, Fraction(size_lam, class_size(mu)))
    return values


def psi_bruteforce(lam: Bipartition, mu: Bipartition, alternate_root: bool = False) -> int:
    """psi^lam(mu) summed over the centralizer of a canonical representative.

    With alternate_root=True a different primitive root of unity is used for
    every cyclic factor; the result must not change (rationality of the
    character), which the tests spot-check.
    """
    if lam.n != mu.n:
        raise ValueError("lam and mu must have equal sizes")
    tag = "alt" if alternate_root else "first"
    return _psi_brute_row(lam, tag)[mu]


def psi_bruteforce_classfunction(lam: Bipartition) -> ClassFunction:
    return ClassFunction("B", lam.n, dict(_psi_brute_row(lam, "first")))


# ---------------------------------------------------------------------------
# aggregates over the divisibility predicates


@lru_cache(maxsize=None)
def _psi_aggregate(n: int, k: int, signed: bool) -> ClassFunction:
    agg = series.psi_aggregate_from_series(n, k, signed=signed)
    if n <= PSI_COMPARE_BOUND:
        total = {mu: 0 for mu in bipartitions(n)}
        for lam in vdash_types(n, k, signed=signed):
            for mu in bipartitions(n):
                total[mu] += series.psi_from_series(lam, mu)
        if total != agg.values:
            raise AssertionError(
                f"aggregate mismatch between specialized series and per-type sums (n={n}, k={k})"
            )
    return agg


def psi_k_sum(n: int, k: int) -> ClassFunction:
    """Sum of psi^lam over cycle types with trivial k-th power."""
    return _psi_aggregate(n, abs(k), False)


def spsi_k_sum(n: int, k: int) -> ClassFunction:
    """Sum of psi^lam over cycle types whose k-th power is the longest element."""
    return _psi_aggregate(n, abs(k), True)


# ---------------------------------------------------------------------------
# type A (symmetric group)


def _perm_compose(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(a[j - 1] for j in b)


def _perm_cycle_type(p: tuple[int, ...]) -> Partition:
    seen = [False] * len(p)
    out = []
    for s in range(1, len(p) + 1):
        if seen[s - 1]:
            continue
        length = 0
        j = s
        while not seen[j - 1]:
            seen[j - 1] = True
            length += 1
            j = p[j - 1]
        out.append(length)
    return tuple(sorted(out, reverse=True))


def _canonical_perm(lam: Partition) -> tuple[int, ...]:
    perm = [0] * sum(lam)
    start = 1
    for length in lam:
        for t in range(length - 1):
            perm[start + t - 1] = start + t + 1
        perm[start + length - 2] = start
        start += length
    return tuple(perm)


@lru_cache(maxsize=None)
def _psi_s_row(lam: Partition) -> dict[Partition, int]:
    """Type-A higher Lie character values by centralizer summation."""
    n = sum(lam)
    check("brute_force", n)
    import itertools

    x = _canonical_perm(lam)
    # address table: symbol -> (block, cycle, power of the block cycle)
    blocks: list[tuple[int, list[int]]] = []
    by_len: dict[int, int] = {}
    addr: dict[int, tuple[int, int, int]] = {}
    start = 1
    for length in lam:
        if length not in by_len:
            by_len[length] = len(blocks)
            blocks.append((length, []))
        bi = by_len[length]
        r = len(blocks[bi][1])
        blocks[bi][1].append(start)
        for t in range(length):
            addr[start + t] = (bi, r, t)
        start += length
    counts: dict[Partition, dict[Fraction, int]] = {}
    for z in itertools.permutations(range(1, n + 1)):
        if _perm_compose(z, x) != _perm_compose(x, z):
            continue
        mu = _perm_cycle_type(z)
        phase = Fraction(0)
        ok = True
        for bi, (length, bases) in enumerate(blocks):
            a = len(bases)
            sigma = [0] * a
            kval = [0] * a
            for r, p in enumerate(bases):
                cell = addr[z[p - 1]]
                if cell[0] != bi:
                    ok = False
                    break
                sigma[r] = cell[1]
                kval[r] = cell[2]
            if not ok:
                break
            done = [False] * a
            for r0 in range(a):
                if done[r0]:
                    continue
                total = 0
                r = r0
                while not done[r]:
                    done[r] = True
                    total += kval[r]
                    r = sigma[r]
                phase += Fraction(total, length)
        assert ok, "centralizer element mixes blocks of distinct lengths"
        phase -= int(phase)
        bucket = counts.setdefault(mu, {})
        bucket[phase] = bucket.get(phase, 0) + 1
    size_lam = s_class_size(lam)
    values: dict[Partition, int] = {}
    for mu in partitions(n):
        bucket = counts.get(mu)
        values[mu] = (
            0 if not bucket else _phase_sum_to_int(bucket, Fraction(size_lam, s_class_size(mu)))
        )
    return values


def psi_S(lam: Partition, mu: Partition) -> int:
    """Type-A higher Lie character value psi^lam(mu)."""
    if sum(lam) != sum(mu):
        raise ValueError("lam and mu must have equal sizes")
    return _psi_s_row(lam)[mu]


def scharf_check(n: int, k: int) -> bool:
    """Root enumerator of the symmetric group vs. higher Lie character sum."""
    a = abs(k)
    target = root_enumerator_S(n, k).values
    total: dict[Partition, int] = {mu: 0 for mu in partitions(n)}
    for lam in partitions(n):
        if a != 0 and any(a % i for i in lam):
            continue
        row = _psi_s_row(lam)
        for mu in partitions(n):
            total[mu] += row[mu]
    return total == target


# ---------------------------------------------------------------------------
# type D


class SplitClassError(ValueError):
    """Raised for classes that break into two rotation-subgroup classes.

    A class inside the index-2 rotation subgroup splits exactly when all its
    cycles are even and positive; its centralizer is then contained in the
    subgroup, the induced-character construction needs a choice between the
    two halves, and no consistent family exists, so evaluation is refused.
    """


def psi_D(c: Bipartition, mu: Bipartition) -> int:
    """Higher Lie character of the rotation subgroup, via restriction.

    Defined for classes that do not split (some negative cycle or some odd
    cycle): there the subgroup character is the restriction of the
    corresponding full-group character, so values agree with the series
    route on every class inside the subgroup.
    """
    if class_chi(c) != 1:
        raise ValueError(f"class {c.encode()} is not in the rotation subgroup")
    if class_chi(mu) != 1:
        raise ValueError(f"class {mu.encode()} is not in the rotation subgroup")
    if not c.minus and all(i % 2 == 0 for i in c.plus):
        raise SplitClassError(
            f"class {c.encode()} splits in the rotation subgroup "
            "(all cycles even and positive); no canonical induced character"
        )
    return series.psi_from_series(c, mu)


def dn_half_sum_mismatches(n: int, k: int) -> list[str]:
    """Compare (psi_k + signed psi_k) against twice the subgroup root count.

    The sum must equal 2 * (k-th root enumerator of the rotation subgroup) on
    classes inside the subgroup and vanish outside; both sides are computed
    through different pipelines (series vs. class-level power map).
    """
    plus = psi_k_sum(n, k)
    minus = spsi_k_sum(n, k)
    d_counts = subgroup_root_enumerator(n, k, "D")
    bad = []
    for mu in bipartitions(n):
        lhs = plus.values[mu] + minus.values[mu]
        rhs = 2 * d_counts.values[mu] if class_chi(mu) == 1 else 0
        if lhs != rhs:
            bad.append(f"n={n} k={k} class={mu.encode()}: {lhs} != {rhs}")
    return bad


def dn_half_sum_check(n: int, k: int) -> bool:
    return not dn_half_sum_mismatches(n, k)


def dn_odd_mismatches(n: int, k: int) -> list[str]:
    """Root enumerator of the rotation subgroup vs. its own character sum.

    Valid when n or k is odd; then no contributing class splits and the
    subgroup higher Lie characters are plain restrictions.
    """
    if n % 2 == 0 and k % 2 == 0:
        raise ValueError("identity requires n or k odd")
    d_counts = subgroup_root_enumerator(n, k, "D")
    contributing = [
        c for c in bipartitions(n) if class_chi(c) == 1 and divides_k(c, k)
    ]
    bad = []
    for mu in bipartitions(n):
        if class_chi(mu) != 1:
            continue
        rhs = sum(psi_D(c, mu) for c in contributing)
        if rhs != d_counts.values[mu]:
            bad.append(f"n={n} k={k} class={mu.encode()}: {d_counts.values[mu]} != {rhs}")
    return bad


def dn_odd_check(n: int, k: int) -> bool:
    return not dn_odd_mismatches(n, k)
