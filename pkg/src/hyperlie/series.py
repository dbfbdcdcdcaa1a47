"""Truncated multivariate exponential generating functions, exact rationals.

Monomials are indexed by bipartitions: the bipartition mu with b parts of
size j and sign theta stands for the monomial prod t_{j,theta}^(j*b).  This
is lossless for every series built here, because each term only ever carries
exponents that are multiples of j on t_{j,theta}, and it makes coefficient
-> class-function extraction a dictionary lookup.  The two-alphabet series
(s and t) use a pair of bipartitions as key.

Three argument builders feed `exp`:

* `gf_roots_argument(k, twist, N)` - the argument whose exponential
  generates twisted k-th root enumerator values divided by centralizer
  orders;
* `hlc_argument("full", N)` - the two-alphabet argument whose exponential
  generates values of the higher Lie characters (coefficient of s^lam t^mu
  is psi^lam(mu)/|Z_mu|);
* `hlc_argument("divides"/"divides-minus", N, k)` - the s-specialization
  keeping only the cycle types whose k-th power is the identity (resp. the
  longest element), which generates the aggregate characters directly.

All coefficients stay `Fraction`s; nothing here ever touches floats.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

from .combinatorics import (
    Bipartition,
    bipartitions,
    divisors,
    k_coeff,
    roots_z2,
    signed_roots_z2,
)
from .group import centralizer_order
from .limits import check
from .rootcount import ClassFunction

EMPTY = Bipartition((), ())


def merge_bipartitions(a: Bipartition, b: Bipartition) -> Bipartition:
    return Bipartition(
        tuple(sorted(a.plus + b.plus, reverse=True)),
        tuple(sorted(a.minus + b.minus, reverse=True)),
    )


def _uniform_bipartition(size: int, count: int, sign: int) -> Bipartition:
    parts = (size,) * count
    return Bipartition(parts, ()) if sign == 1 else Bipartition((), parts)


class Series:
    """Weight-truncated formal series with Fraction coefficients.

    In one-alphabet mode keys are bipartitions (the t-monomials); in
    two-alphabet mode keys are (lam, mu) pairs and a monomial is stored only
    while both weights are <= trunc.
    """

    __slots__ = ("trunc", "two_alphabet", "terms")

    def __init__(self, trunc: int, two_alphabet: bool = False):
        self.trunc = trunc
        self.two_alphabet = two_alphabet
        self.terms: dict = {}

    def _fits(self, key) -> bool:
        if self.two_alphabet:
            return key[0].n <= self.trunc and key[1].n <= self.trunc
        return key.n <= self.trunc

    def add_term(self, key, coeff) -> None:
        if coeff == 0 or not self._fits(key):
            return
        new = self.terms.get(key, 0) + coeff
        if new == 0:
            self.terms.pop(key, None)
        else:
            self.terms[key] = new

    @classmethod
    def one(cls, trunc: int, two_alphabet: bool = False) -> "Series":
        key = (EMPTY, EMPTY) if two_alphabet else EMPTY
        s = cls(trunc, two_alphabet)
        s.terms[key] = Fraction(1)
        return s

    def coeff(self, key) -> Fraction:
        return self.terms.get(key, Fraction(0))

    def constant_term(self) -> Fraction:
        key = (EMPTY, EMPTY) if self.two_alphabet else EMPTY
        return self.coeff(key)

    def __add__(self, other: "Series") -> "Series":
        assert self.two_alphabet == other.two_alphabet
        out = Series(min(self.trunc, other.trunc), self.two_alphabet)
        for key, c in self.terms.items():
            out.add_term(key, c)
        for key, c in other.terms.items():
            out.add_term(key, c)
        return out

    def scale(self, factor) -> "Series":
        out = Series(self.trunc, self.two_alphabet)
        if factor == 0:
            return out
        for key, c in self.terms.items():
            out.terms[key] = c * factor
        return out

    def __mul__(self, other: "Series") -> "Series":
        assert self.two_alphabet == other.two_alphabet
        trunc = min(self.trunc, other.trunc)
        out = Series(trunc, self.two_alphabet)
        acc = out.terms
        if self.two_alphabet:
            for (la, ma), ca in self.terms.items():
                wa_s, wa_t = la.n, ma.n
                for (lb, mb), cb in other.terms.items():
                    if wa_s + lb.n > trunc or wa_t + mb.n > trunc:
                        continue
                    key = (merge_bipartitions(la, lb), merge_bipartitions(ma, mb))
                    new = acc.get(key, 0) + ca * cb
                    if new == 0:
                        acc.pop(key, None)
                    else:
                        acc[key] = new
        else:
            for ma, ca in self.terms.items():
                wa = ma.n
                for mb, cb in other.terms.items():
                    if wa + mb.n > trunc:
                        continue
                    key = merge_bipartitions(ma, mb)
                    new = acc.get(key, 0) + ca * cb
                    if new == 0:
                        acc.pop(key, None)
                    else:
                        acc[key] = new
        return out

    def exp(self) -> "Series":
        """exp(self) as sum of powers /m!, valid for zero constant term.

        Truncation guarantees termination: the argument has positive minimal
        weight, so its m-th power vanishes once m exceeds the truncation.
        """
        if self.constant_term() != 0:
            raise ValueError("series exponential needs a zero constant term")
        total = Series.one(self.trunc, self.two_alphabet)
        term = Series.one(self.trunc, self.two_alphabet)
        m = 1
        while True:
            term = (term * self).scale(Fraction(1, m))
            if not term.terms:
                break
            total = total + term
            m += 1
        return total

    def dump(self) -> str:
        """One line per monomial: `<s-bp>;<t-bp> -> p/q` (t-only: `<t-bp> -> p/q`)."""
        lines = []
        if self.two_alphabet:
            keys = sorted(self.terms, key=lambda k: (k[0].n, k[1].n, k[0].encode(), k[1].encode()))
            for key in keys:
                c = self.terms[key]
                lines.append(f"{key[0].encode()};{key[1].encode()} -> {c.numerator}/{c.denominator}")
        else:
            keys = sorted(self.terms, key=lambda k: (k.n, k.encode()))
            for key in keys:
                c = self.terms[key]
                lines.append(f"{key.encode()} -> {c.numerator}/{c.denominator}")
        return "\n".join(lines)


def series_mul(f: Series, g: Series, trunc: int | None = None) -> Series:
    out = f * g
    if trunc is not None:
        out.trunc = min(out.trunc, trunc)
        out.terms = {k: v for k, v in out.terms.items() if out._fits(k)}
    return out


def series_exp(f: Series) -> Series:
    return f.exp()


def gf_roots_argument(k: int, twist: str, trunc: int) -> Series:
    """Argument of the generating-function exponential for twisted root counts.

    For each cycle length j, sign theta and divisor h of k coprime to j the
    term sits on t_{j,theta}^(j*k/h) with coefficient c/(2*j*k/h), where c
    counts (twist "1") or sign-sums (twist "chi") the h-th roots of theta in
    the two-element group; twists "chiP" and "chichiP" carry the extra sign
    -(-1)^(j*k/h) coming from the sign character of the underlying
    permutation.
    """
    if k <= 0:
        raise ValueError("gf_roots_argument needs k >= 1 (normalize upstream)")
    out = Series(trunc)
    for j in range(1, trunc + 1):
        for h in divisors(k):
            if gcd(h, j) != 1:
                continue
            exponent = j * (k // h)
            if exponent > trunc:
                continue
            for theta in (1, -1):
                if twist in ("1", "chiP"):
                    base = roots_z2(h, theta)
                else:
                    base = signed_roots_z2(h, theta)
                if twist in ("chiP", "chichiP") and exponent % 2 == 0:
                    base = -base
                if base == 0:
                    continue
                key = _uniform_bipartition(j, k // h, theta)
                out.add_term(key, Fraction(base, 2 * exponent))
    return out


def _divides_predicate(mode: str, k: int):
    a = abs(k)

    def allowed(i: int, eps: int) -> bool:
        if a == 0:
            return mode == "divides"
        if a % i != 0:
            return False
        quot = a // i
        if mode == "divides":
            return eps == 1 or quot % 2 == 0
        return eps == -1 and quot % 2 == 1

    return allowed


def hlc_argument(mode: str, trunc: int, k: int | None = None) -> Series:
    """Argument generating higher Lie character values.

    mode "full": two-alphabet; term for lengths i, j, signs eps, theta and a
    common divisor e of i and j sits on (s_{i,eps} t_{j,theta})^(i*j/e) with
    coefficient K_{eps,theta}(e)/(2*i*j/e).

    mode "divides" / "divides-minus" (with k): the s-alphabet is specialized
    to 1 on the (i, eps) admissible for x^k = 1 (resp. x^k = longest
    element) and 0 elsewhere, leaving a one-alphabet series.
    """
    if mode == "full":
        out = Series(trunc, two_alphabet=True)
        for i in range(1, trunc + 1):
            for j in range(1, trunc + 1):
                for e in divisors(gcd(i, j)):
                    w = i * j // e
                    if w > trunc:
                        continue
                    for eps in (1, -1):
                        for theta in (1, -1):
                            c = k_coeff(eps, theta, e)
                            if c == 0:
                                continue
                            key = (
                                _uniform_bipartition(i, j // e, eps),
                                _uniform_bipartition(j, i // e, theta),
                            )
                            out.add_term(key, Fraction(c, 2 * w))
        return out

    if mode not in ("divides", "divides-minus"):
        raise ValueError(f"unknown hlc_argument mode {mode!r}")
    if k is None:
        raise ValueError("specialized hlc_argument needs k")
    allowed = _divides_predicate(mode, k)
    out = Series(trunc)
    for i in range(1, trunc + 1):
        for eps in (1, -1):
            if not allowed(i, eps):
                continue
            for j in range(1, trunc + 1):
                for e in divisors(gcd(i, j)):
                    w = i * j // e
                    if w > trunc:
                        continue
                    for theta in (1, -1):
                        c = k_coeff(eps, theta, e)
                        if c == 0:
                            continue
                        out.add_term(_uniform_bipartition(j, i // e, theta), Fraction(c, 2 * w))
    return out


def coefficients_to_classfunction(series: Series, n: int) -> ClassFunction:
    """Read off a degree-n class function: value at mu = Z_mu * coeff(mu)."""
    if series.two_alphabet:
        raise ValueError("need a one-alphabet series")
    if n > series.trunc:
        raise ValueError(f"series truncated at {series.trunc} < {n}")
    values = {}
    for mu in bipartitions(n):
        v = series.coeff(mu) * centralizer_order(mu)
        assert v.denominator == 1, f"non-integral coefficient at {mu}"
        values[mu] = int(v)
    return ClassFunction("B", n, values)


@lru_cache(maxsize=None)
def _hlc_exp_full(trunc: int) -> Series:
    return hlc_argument("full", trunc).exp()


@lru_cache(maxsize=None)
def _hlc_exp_specialized(mode: str, k: int, trunc: int) -> Series:
    return hlc_argument(mode, trunc, k).exp()


@lru_cache(maxsize=None)
def _gf_exp(k: int, twist: str, trunc: int) -> Series:
    return gf_roots_argument(k, twist, trunc).exp()


def root_enumerator_from_series(n: int, k: int, twist: str = "1") -> ClassFunction:
    """Twisted root enumerator read off the generating function (k >= 1)."""
    return coefficients_to_classfunction(_gf_exp(abs(k), twist, n), n)


def psi_from_series(lam: Bipartition, mu: Bipartition) -> int:
    """psi^lam(mu): centralizer order times a two-alphabet coefficient."""
    n = lam.n
    if mu.n != n:
        raise ValueError("lam and mu must have equal sizes")
    check("series", n)
    coeff = _hlc_exp_full(n).coeff((lam, mu))
    v = coeff * centralizer_order(mu)
    assert v.denominator == 1, f"non-integral psi value at ({lam}, {mu})"
    return int(v)


def psi_classfunction_from_series(lam: Bipartition) -> ClassFunction:
    n = lam.n
    check("series", n)
    return ClassFunction("B", n, {mu: psi_from_series(lam, mu) for mu in bipartitions(n)})


def psi_aggregate_from_series(n: int, k: int, signed: bool = False) -> ClassFunction:
    """Sum of psi^lam over the k-divisibility-selected cycle types, in one shot."""
    check("series", n)
    mode = "divides-minus" if signed else "divides"
    return coefficients_to_classfunction(_hlc_exp_specialized(mode, abs(k), n), n)
