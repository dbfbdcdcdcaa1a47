"""Class-level power maps and exact k-th root enumerators.

The k-th root enumerator of a group sends y to the number of x with x^k = y
(optionally each x weighted by a linear character).  It is constant on
conjugacy classes, so two routes compute it here:

* `root_enumerator`: through the class-level power map, summing class-size
  ratios over the fibers of the power map, in exact rational arithmetic with a
  final integrality assertion;
* `brute_force_root_enumerator`: a literal sum over all group elements, used
  as the oracle for the class-level route.

Negative k is mapped to |k| (every element is conjugate to its inverse, so
the enumerators agree; the class-level identity class_power(bp, -k) ==
class_power(bp, k) is asserted in the test suite).  k = 0 degenerates to the
regular character and is handled by the same code path.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial, gcd

from . import backend
from .combinatorics import Bipartition, Partition, bipartitions, partitions
from .group import (
    class_chi,
    class_chi_prime,
    class_in_subgroup,
    class_size,
    group_order,
    iter_windows,
)
from .limits import check

TWISTS = ("1", "chi", "chiP", "chichiP")


def twist_of_class(bp: Bipartition, twist: str) -> int:
    """Value of the named linear character on the class bp."""
    if twist == "1":
        return 1
    if twist == "chi":
        return class_chi(bp)
    if twist == "chiP":
        return class_chi_prime(bp)
    if twist == "chichiP":
        return class_chi(bp) * class_chi_prime(bp)
    raise ValueError(f"unknown twist {twist!r}; known: {TWISTS}")


@dataclass
class ClassFunction:
    """Exact-rational class function, keyed by canonical class labels.

    `group` is one of S, B, D, Z2A, AB, AD.  For S the keys are partitions;
    otherwise bipartitions.  For the subgroups of B the keys are the B-class
    labels contained in the subgroup: every function this package produces is
    a rational combination of B-class functions, hence constant across the
    two halves of a class that splits in the subgroup.
    """

    group: str
    n: int
    values: dict = field(default_factory=dict)

    def __getitem__(self, label):
        return self.values[label]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ClassFunction)
            and self.group == other.group
            and self.n == other.n
            and self.values == other.values
        )

    def encode_label(self, label) -> str:
        if self.group == "S":
            return "[" + ",".join(str(i) for i in label) + "]"
        return label.encode()

    def to_json_obj(self, **meta) -> dict:
        obj: dict = {"group": self.group, "n": self.n}
        obj.update(meta)
        obj["values"] = [
            {"class": self.encode_label(label), "value": _encode_value(v)}
            for label, v in self.values.items()
        ]
        return obj


def _encode_value(v) -> str:
    if isinstance(v, Fraction) and v.denominator != 1:
        return f"{v.numerator}/{v.denominator}"
    return str(int(v))


def class_power(bp: Bipartition, k: int) -> Bipartition:
    """Signed cycle type of the k-th power of an element of type bp.

    A cycle of length l and sign eps contributes, with d = gcd(|k|, l), d
    cycles of length l/d and sign eps^(|k|/d); for k = 0 every cycle falls
    apart into positive fixed points.
    """
    k = abs(k)
    plus: list[int] = []
    minus: list[int] = []
    for length, sign in [(i, 1) for i in bp.plus] + [(i, -1) for i in bp.minus]:
        if k == 0:
            plus.extend([1] * length)
            continue
        d = gcd(k, length)
        new_sign = sign if (k // d) % 2 else 1
        target = plus if new_sign == 1 else minus
        target.extend([length // d] * d)
    plus.sort(reverse=True)
    minus.sort(reverse=True)
    return Bipartition(tuple(plus), tuple(minus))


@lru_cache(maxsize=None)
def _root_enumerator_cached(n: int, k: int, twist: str) -> ClassFunction:
    values = {bp: 0 for bp in bipartitions(n)}
    accum: dict[Bipartition, Fraction] = {bp: Fraction(0) for bp in values}
    for bp in values:
        target = class_power(bp, k)
        accum[target] += twist_of_class(bp, twist) * Fraction(class_size(bp), class_size(target))
    for bp, v in accum.items():
        assert v.denominator == 1, f"non-integral enumerator value at {bp}"
        values[bp] = int(v)
    return ClassFunction("B", n, values)


def root_enumerator(n: int, k: int, twist: str = "1") -> ClassFunction:
    """Twisted k-th root enumerator of the rank-n signed group, class route."""
    check("class_level", n)
    if twist not in TWISTS:
        raise ValueError(f"unknown twist {twist!r}; known: {TWISTS}")
    return _root_enumerator_cached(n, abs(k), twist)


_TWIST_INDEX = {t: i for i, t in enumerate(TWISTS)}


@lru_cache(maxsize=None)
def _brute_tables(n: int, k: int) -> dict[Bipartition, tuple[int, int, int, int]]:
    """Literal per-class (1, chi, chiP, chi*chiP)-weighted root counts.

    One pass over all 2^n n! elements x: the four weights of x accumulate at
    the element x^k; a second pass groups elements by class and asserts the
    four counts are constant on every class.
    """
    power = backend.power
    chi = backend.window_chi
    chi_prime = backend.window_chi_prime
    cycle_type = backend.cycle_type

    per_element: dict[tuple[int, ...], list[int]] = {}
    for w in iter_windows(n):
        c = chi(w)
        cp = chi_prime(w)
        y = power(w, k)
        cell = per_element.get(y)
        if cell is None:
            cell = [0, 0, 0, 0]
            per_element[y] = cell
        cell[0] += 1
        cell[1] += c
        cell[2] += cp
        cell[3] += c * cp

    by_class: dict[Bipartition, tuple[int, int, int, int]] = {
        bp: (0, 0, 0, 0) for bp in bipartitions(n)
    }
    seen_counts: dict[Bipartition, int] = {}
    for w in iter_windows(n):
        bp = Bipartition(*cycle_type(w))
        cell = tuple(per_element.get(w, (0, 0, 0, 0)))
        if bp in seen_counts:
            assert by_class[bp] == cell, f"root counts not constant on class {bp}"
            seen_counts[bp] += 1
        else:
            by_class[bp] = cell
            seen_counts[bp] = 1
    for bp, cnt in seen_counts.items():
        assert cnt == class_size(bp)
    return by_class


def brute_force_root_enumerator(n: int, k: int, twist: str = "1") -> ClassFunction:
    """Oracle route: literal count/sum over every group element."""
    check("brute_force", n)
    if twist not in TWISTS:
        raise ValueError(f"unknown twist {twist!r}; known: {TWISTS}")
    idx = _TWIST_INDEX[twist]
    table = _brute_tables(n, abs(k))
    return ClassFunction("B", n, {bp: cell[idx] for bp, cell in table.items()})


_SUBGROUP_MIX: dict[str, tuple[tuple[str, ...], int]] = {
    "D": (("1", "chi"), 2),
    "Z2A": (("1", "chiP"), 2),
    "AB": (("1", "chichiP"), 2),
    "AD": (("1", "chi", "chiP", "chichiP"), 4),
}


def subgroup_root_enumerator(n: int, k: int, sub: str) -> ClassFunction:
    """k-th root enumerator of an index-2 (or the index-4) subgroup.

    Averaging the enumerators twisted by the linear characters with the
    subgroup as common kernel kills every class outside the subgroup (this is
    asserted) and yields the subgroup count on classes inside it.
    """
    if sub not in _SUBGROUP_MIX:
        raise ValueError(f"unknown subgroup {sub!r}; known: {tuple(_SUBGROUP_MIX)}")
    twists, denom = _SUBGROUP_MIX[sub]
    parts = [root_enumerator(n, k, t) for t in twists]
    values: dict[Bipartition, int] = {}
    for bp in bipartitions(n):
        total = sum(p.values[bp] for p in parts)
        if class_in_subgroup(bp, sub):
            assert total % denom == 0, f"non-integral subgroup count at {bp}"
            values[bp] = total // denom
        else:
            assert total == 0, f"root-count combination must vanish off {sub} at {bp}"
    return ClassFunction(sub, n, values)


def brute_force_subgroup_root_enumerator(n: int, k: int, sub: str) -> ClassFunction:
    """Literal root count inside the subgroup; oracle for the combination route."""
    check("brute_force", n)
    from .group import SignedPermutation, subgroup_member

    power = backend.power
    cycle_type = backend.cycle_type
    counts: dict[tuple[int, ...], int] = {}
    for w in iter_windows(n):
        if not subgroup_member(SignedPermutation(w), sub):
            continue
        y = power(w, abs(k))
        counts[y] = counts.get(y, 0) + 1
    values: dict[Bipartition, int] = {}
    sizes: dict[Bipartition, int] = {}
    for w in iter_windows(n):
        bp = Bipartition(*cycle_type(w))
        if not class_in_subgroup(bp, sub):
            continue
        c = counts.get(w, 0)
        if bp in values:
            assert values[bp] == c, f"subgroup root counts not constant on B-class {bp}"
            sizes[bp] += 1
        else:
            values[bp] = c
            sizes[bp] = 1
    return ClassFunction(sub, n, values)


def s_class_size(p: Partition) -> int:
    n = sum(p)
    z = 1
    mult: dict[int, int] = {}
    for i in p:
        mult[i] = mult.get(i, 0) + 1
    for i, a in mult.items():
        z *= i**a * factorial(a)
    return factorial(n) // z


def s_class_power(p: Partition, k: int) -> Partition:
    k = abs(k)
    out: list[int] = []
    for length in p:
        if k == 0:
            out.extend([1] * length)
        else:
            d = gcd(k, length)
            out.extend([length // d] * d)
    return tuple(sorted(out, reverse=True))


@lru_cache(maxsize=None)
def _root_enumerator_s_cached(n: int, k: int) -> ClassFunction:
    accum: dict[Partition, Fraction] = {p: Fraction(0) for p in partitions(n)}
    for p in partitions(n):
        target = s_class_power(p, k)
        accum[target] += Fraction(s_class_size(p), s_class_size(target))
    values = {}
    for p, v in accum.items():
        assert v.denominator == 1
        values[p] = int(v)
    return ClassFunction("S", n, values)


def root_enumerator_S(n: int, k: int) -> ClassFunction:
    """k-th root enumerator of the symmetric group, class-level route."""
    check("root_s", n)
    return _root_enumerator_s_cached(n, abs(k))


def brute_force_root_enumerator_S(n: int, k: int) -> ClassFunction:
    """Oracle: literal count over all n! permutations."""
    check("brute_force", n)
    import itertools

    def perm_power(p: tuple[int, ...], k: int) -> tuple[int, ...]:
        out = list(range(1, len(p) + 1))
        for _ in range(abs(k)):
            out = [p[j - 1] for j in out]
        return tuple(out)

    def perm_type(p: tuple[int, ...]) -> Partition:
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

    counts: dict[tuple[int, ...], int] = {}
    elements = list(itertools.permutations(range(1, n + 1)))
    for p in elements:
        y = perm_power(p, k)
        counts[y] = counts.get(y, 0) + 1
    values: dict[Partition, int] = {q: 0 for q in partitions(n)}
    rep_seen: dict[Partition, int] = {}
    for p in elements:
        t = perm_type(p)
        c = counts.get(p, 0)
        if t in rep_seen:
            assert values[t] == c
        else:
            values[t] = c
            rep_seen[t] = 1
    return ClassFunction("S", n, values)


def mass_check(f: ClassFunction) -> int:
    """Total mass sum_mu |C_mu| f(mu); equals |G| for untwisted enumerators."""
    if f.group == "S":
        return sum(s_class_size(p) * v for p, v in f.values.items())
    return sum(class_size(bp) * v for bp, v in f.values.items())

