"""Partitions, bipartitions, the Möbius function and small sign arithmetic.

Everything is exact and deterministic.  Partitions are tuples of positive
integers in weakly decreasing order; a bipartition is a (plus, minus) pair of
partitions and indexes a conjugacy class of the signed permutation group of
rank n = |plus| + |minus|.  Enumeration orders are fixed once and for all so
that class functions serialize byte-stably:

* partitions(n) lists partitions in descending lexicographic order;
* bipartitions(n) lists (plus, minus) with |plus| descending from n to 0,
  and each side in partitions() order.
"""

from __future__ import annotations

from functools import lru_cache
from math import gcd, isqrt
from typing import Iterator, NamedTuple

Partition = tuple[int, ...]


def _partitions_bounded(n: int, bound: int) -> Iterator[Partition]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, bound), 0, -1):
        for rest in _partitions_bounded(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of n, each exactly once, in descending lex order."""
    if n < 0:
        raise ValueError("partitions(n) needs n >= 0")
    return tuple(_partitions_bounded(n, n))


def is_partition(p) -> bool:
    return (
        isinstance(p, tuple)
        and all(isinstance(x, int) and x >= 1 for x in p)
        and all(p[i] >= p[i + 1] for i in range(len(p) - 1))
    )


class Bipartition(NamedTuple):
    """A pair of partitions; the signed cycle type of a signed permutation."""

    plus: Partition
    minus: Partition

    @property
    def n(self) -> int:
        return sum(self.plus) + sum(self.minus)

    def counts(self) -> dict[tuple[int, int], int]:
        """Multiplicities {(part size, sign): count} with sign in {+1, -1}."""
        out: dict[tuple[int, int], int] = {}
        for i in self.plus:
            out[(i, 1)] = out.get((i, 1), 0) + 1
        for i in self.minus:
            out[(i, -1)] = out.get((i, -1), 0) + 1
        return out

    def encode(self) -> str:
        """Text form `[p1,p2,...|q1,q2,...]`; the empty bipartition is `[]`."""
        if not self.plus and not self.minus:
            return "[]"
        left = ",".join(str(i) for i in self.plus)
        right = ",".join(str(i) for i in self.minus)
        return f"[{left}|{right}]"

    @classmethod
    def decode(cls, text: str) -> "Bipartition":
        if not (text.startswith("[") and text.endswith("]")):
            raise ValueError(f"bad bipartition literal {text!r}")
        body = text[1:-1]
        if body == "":
            return cls((), ())
        if body.count("|") != 1:
            raise ValueError(f"bad bipartition literal {text!r}")
        left, right = body.split("|")
        plus = tuple(int(x) for x in left.split(",")) if left else ()
        minus = tuple(int(x) for x in right.split(",")) if right else ()
        bp = cls(plus, minus)
        bp.validate()
        return bp

    def validate(self) -> None:
        if not (is_partition(self.plus) and is_partition(self.minus)):
            raise ValueError(f"not a canonical bipartition: {self!r}")


def bipartition(plus, minus) -> Bipartition:
    """Canonicalize and validate a (plus, minus) pair of part sequences."""
    bp = Bipartition(tuple(sorted(plus, reverse=True)), tuple(sorted(minus, reverse=True)))
    bp.validate()
    return bp


@lru_cache(maxsize=None)
def bipartitions(n: int) -> tuple[Bipartition, ...]:
    """All bipartitions of n, |plus| descending from n to 0."""
    if n < 0:
        raise ValueError("bipartitions(n) needs n >= 0")
    out = []
    for a in range(n, -1, -1):
        for p in partitions(a):
            for m in partitions(n - a):
                out.append(Bipartition(p, m))
    return tuple(out)


def encode_partition(p: Partition) -> str:
    return "[" + ",".join(str(i) for i in p) + "]"


@lru_cache(maxsize=None)
def mobius(m: int) -> int:
    """Möbius function: 1 at 1, (-1)^k on squarefree products of k primes, else 0."""
    if m < 1:
        raise ValueError("mobius(m) needs m >= 1")
    result = 1
    p = 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            result = -result
        p += 1 if p == 2 else 2
    if m > 1:
        result = -result
    return result


def _check_sign(s: int) -> int:
    if s not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, not {s!r}")
    return s


def k_coeff(eps: int, theta: int, e: int) -> int:
    """Möbius-type coefficient attached to a sign pair and a common divisor e.

    Equals eps*theta*mu(2e) + (1+eps)(1+theta)/2 * mu(e); the sign-split form
    is: for e odd it is mu(e) unless eps = theta = -1 where it is -mu(e), and
    for e even it is 2*mu(e) when eps = theta = +1 and 0 otherwise.
    """
    _check_sign(eps)
    _check_sign(theta)
    if e < 1:
        raise ValueError("k_coeff needs e >= 1")
    return eps * theta * mobius(2 * e) + ((1 + eps) * (1 + theta) // 2) * mobius(e)


def roots_z2(h: int, theta: int) -> int:
    """Number of signs eps with eps^h = theta (h any integer)."""
    _check_sign(theta)
    if h % 2 == 0:
        return 2 if theta == 1 else 0
    return 1


def signed_roots_z2(h: int, theta: int) -> int:
    """Sum of eps over signs with eps^h = theta."""
    _check_sign(theta)
    if h % 2 == 0:
        return 0
    return theta


def divisors(k: int) -> list[int]:
    """Positive divisors of |k|, ascending.  k = 0 is rejected."""
    if k == 0:
        raise ValueError("divisors(0) is undefined")
    k = abs(k)
    small = []
    large = []
    for d in range(1, isqrt(k) + 1):
        if k % d == 0:
            small.append(d)
            if d != k // d:
                large.append(k // d)
    return small + large[::-1]


__all__ = [
    "Partition",
    "Bipartition",
    "partitions",
    "bipartitions",
    "bipartition",
    "is_partition",
    "encode_partition",
    "mobius",
    "k_coeff",
    "roots_z2",
    "signed_roots_z2",
    "divisors",
    "gcd",
]
