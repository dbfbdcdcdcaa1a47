"""Signed permutations and class data for the hyperoctahedral group.

Elements are kept in window notation: w is the tuple (w(1), ..., w(n)) with
w(-i) = -w(i) implied.  Cycle views are always computed, never stored.  The
group of rank n has order 2^n * n!; its conjugacy classes are indexed by
bipartitions of n (lengths of positive cycles, lengths of negative cycles).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Iterator

from . import backend
from .combinatorics import Bipartition
from .limits import check

SUBGROUPS = ("D", "Z2A", "AB", "AD")


class SignedPermutation:
    """A signed permutation in window notation."""

    __slots__ = ("window",)

    def __init__(self, window):
        window = tuple(window)
        n = len(window)
        if sorted(abs(x) for x in window) != list(range(1, n + 1)):
            raise ValueError(f"not a signed permutation window: {window!r}")
        self.window = window

    @property
    def n(self) -> int:
        return len(self.window)

    @classmethod
    def identity(cls, n: int) -> "SignedPermutation":
        return cls(backend.identity_window(n))

    @classmethod
    def from_text(cls, text: str) -> "SignedPermutation":
        """Parse the text form `[2,-1,3]`."""
        body = text.strip()
        if not (body.startswith("[") and body.endswith("]")):
            raise ValueError(f"bad window literal {text!r}")
        body = body[1:-1]
        return cls(tuple(int(x) for x in body.split(",")) if body else ())

    def encode(self) -> str:
        return "[" + ",".join(str(x) for x in self.window) + "]"

    def __call__(self, i: int) -> int:
        return backend.apply_window(self.window, i)

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        return compose(self, other)

    def __pow__(self, k: int) -> "SignedPermutation":
        return power(self, k)

    def __invert__(self) -> "SignedPermutation":
        return inverse(self)

    def __eq__(self, other) -> bool:
        return isinstance(other, SignedPermutation) and self.window == other.window

    def __hash__(self) -> int:
        return hash(self.window)

    def __repr__(self) -> str:
        return f"SignedPermutation({list(self.window)})"

    def cycle_type(self) -> Bipartition:
        return Bipartition(*backend.cycle_type(self.window))

    def chi(self) -> int:
        """Product of the window entry signs (the sign-flip linear character)."""
        return backend.window_chi(self.window)

    def chi_prime(self) -> int:
        """Sign of the underlying unsigned permutation."""
        return backend.window_chi_prime(self.window)


def compose(x: SignedPermutation, y: SignedPermutation) -> SignedPermutation:
    """Composition x∘y (apply y first)."""
    if x.n != y.n:
        raise ValueError(f"rank mismatch: {x.n} vs {y.n}")
    return SignedPermutation(backend.compose(x.window, y.window))


def inverse(x: SignedPermutation) -> SignedPermutation:
    return SignedPermutation(backend.inverse(x.window))


def power(x: SignedPermutation, k: int) -> SignedPermutation:
    return SignedPermutation(backend.power(x.window, k))


def signed_cycle_type(x: SignedPermutation) -> Bipartition:
    return x.cycle_type()


def longest_element(n: int) -> SignedPermutation:
    """The central involution [-1, ..., -n]."""
    return SignedPermutation(tuple(-i for i in range(1, n + 1)))


def canonical_rep(bp: Bipartition) -> SignedPermutation:
    """Deterministic class representative.

    Cycles occupy consecutive integers, positive cycles first (parts in stored
    order), then negative cycles; each cycle maps p -> p+1 -> ... and wraps to
    +p (positive) or -p (negative).
    """
    window = [0] * bp.n
    start = 1
    for length, sign in [(i, 1) for i in bp.plus] + [(i, -1) for i in bp.minus]:
        for t in range(length - 1):
            window[start + t - 1] = start + t + 1
        window[start + length - 2] = sign * start
        start += length
    return SignedPermutation(window)


def group_order(n: int) -> int:
    return 2**n * factorial(n)


def centralizer_order(bp: Bipartition) -> int:
    """Order of the centralizer of an element of the given signed cycle type.

    Each block of a parts of size i (either sign) contributes a! * (2i)^a.
    """
    out = 1
    for (i, _), a in bp.counts().items():
        out *= factorial(a) * (2 * i) ** a
    return out


def class_size(bp: Bipartition) -> int:
    cent = centralizer_order(bp)
    order = group_order(bp.n)
    assert order % cent == 0
    return order // cent


def class_chi(bp: Bipartition) -> int:
    return -1 if len(bp.minus) % 2 else 1


def class_chi_prime(bp: Bipartition) -> int:
    exponent = sum(i - 1 for i in bp.plus) + sum(i - 1 for i in bp.minus)
    return -1 if exponent % 2 else 1


@dataclass(frozen=True)
class ClassData:
    label: Bipartition
    class_size: int
    centralizer_order: int
    chi: int
    chi_prime: int


def class_data(bp: Bipartition) -> ClassData:
    return ClassData(
        label=bp,
        class_size=class_size(bp),
        centralizer_order=centralizer_order(bp),
        chi=class_chi(bp),
        chi_prime=class_chi_prime(bp),
    )


def iter_windows(n: int) -> Iterator[tuple[int, ...]]:
    """All 2^n * n! windows of rank n, deterministic order, no bound check."""
    for perm in itertools.permutations(range(1, n + 1)):
        for mask in range(1 << n):
            yield tuple(-p if (mask >> idx) & 1 else p for idx, p in enumerate(perm))


def enumerate_group(n: int) -> Iterator[SignedPermutation]:
    """Stream every element of the rank-n group exactly once."""
    check("group_enum", n)
    for window in iter_windows(n):
        yield SignedPermutation(window)


def centralizer_elements(x: SignedPermutation) -> Iterator[SignedPermutation]:
    """All elements commuting with x, by direct filtering of the group."""
    check("centralizer_enum", x.n)
    for w in centralizer_windows(x.window):
        yield SignedPermutation(w)


def centralizer_windows(xw: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    compose_w = backend.compose
    for w in iter_windows(len(xw)):
        if compose_w(w, xw) == compose_w(xw, w):
            yield w


def class_in_subgroup(bp: Bipartition, sub: str) -> bool:
    """Whether the conjugacy class lies inside the named index-2 (or 4) subgroup."""
    if sub == "D":
        return class_chi(bp) == 1
    if sub == "Z2A":
        return class_chi_prime(bp) == 1
    if sub == "AB":
        return class_chi(bp) * class_chi_prime(bp) == 1
    if sub == "AD":
        return class_chi(bp) == 1 and class_chi_prime(bp) == 1
    raise ValueError(f"unknown subgroup {sub!r}; known: {SUBGROUPS}")


def subgroup_member(x: SignedPermutation, sub: str) -> bool:
    """Membership computed from the element itself, not its class label."""
    if sub == "D":
        return x.chi() == 1
    if sub == "Z2A":
        return x.chi_prime() == 1
    if sub == "AB":
        return x.chi() * x.chi_prime() == 1
    if sub == "AD":
        return x.chi() == 1 and x.chi_prime() == 1
    raise ValueError(f"unknown subgroup {sub!r}; known: {SUBGROUPS}")


@lru_cache(maxsize=None)
def class_list(n: int) -> tuple[Bipartition, ...]:
    from .combinatorics import bipartitions

    return bipartitions(n)
