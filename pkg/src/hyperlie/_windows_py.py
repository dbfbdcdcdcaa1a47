"""Pure-Python window-notation kernels for signed permutations.

A signed permutation w of rank n is stored as the tuple
(w(1), ..., w(n)) of nonzero integers whose absolute values permute
{1, ..., n}; w(-i) = -w(i) is implied.  These functions are the hot path of
every brute-force enumeration, so they stay free of any class machinery.
A compiled twin with identical signatures lives in _windows_cy.pyx.
"""

from __future__ import annotations

BACKEND_NAME = "python"


def identity_window(n: int) -> tuple[int, ...]:
    return tuple(range(1, n + 1))


def apply_window(w: tuple[int, ...], i: int) -> int:
    """Image of the signed point i (i may be negative) under w."""
    if i > 0:
        return w[i - 1]
    return -w[-i - 1]


def compose(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    """Window of the composition a∘b, i.e. i -> a(b(i))."""
    out = []
    for j in b:
        out.append(a[j - 1] if j > 0 else -a[-j - 1])
    return tuple(out)


def inverse(a: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * len(a)
    for i, j in enumerate(a, start=1):
        if j > 0:
            out[j - 1] = i
        else:
            out[-j - 1] = -i
    return tuple(out)


def power(a: tuple[int, ...], k: int) -> tuple[int, ...]:
    """k-th power of a (any integer k) by binary exponentiation."""
    if k < 0:
        a = inverse(a)
        k = -k
    result = identity_window(len(a))
    base = a
    while k:
        if k & 1:
            result = compose(base, result)
        k >>= 1
        if k:
            base = compose(base, base)
    return result


def cycle_type(a: tuple[int, ...]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Signed cycle type: (lengths of positive cycles, lengths of negative ones).

    Both length lists come back weakly decreasing.  An orbit of |a| through
    which the entries of a multiply to -1 is a negative cycle; its length is
    the orbit length in {1..n}, not in the doubled domain.
    """
    n = len(a)
    seen = [False] * n
    plus: list[int] = []
    minus: list[int] = []
    for s in range(1, n + 1):
        if seen[s - 1]:
            continue
        length = 0
        sign = 1
        j = s
        while not seen[j - 1]:
            seen[j - 1] = True
            length += 1
            t = a[j - 1]
            if t < 0:
                sign = -sign
                j = -t
            else:
                j = t
        if sign > 0:
            plus.append(length)
        else:
            minus.append(length)
    plus.sort(reverse=True)
    minus.sort(reverse=True)
    return tuple(plus), tuple(minus)


def window_chi(a: tuple[int, ...]) -> int:
    """Product of the signs of the window entries (+1 or -1)."""
    s = 1
    for j in a:
        if j < 0:
            s = -s
    return s


def window_chi_prime(a: tuple[int, ...]) -> int:
    """Sign of the underlying unsigned permutation |a|."""
    n = len(a)
    seen = [False] * n
    cycles = 0
    for s in range(1, n + 1):
        if seen[s - 1]:
            continue
        cycles += 1
        j = s
        while not seen[j - 1]:
            seen[j - 1] = True
            j = abs(a[j - 1])
    return 1 if (n - cycles) % 2 == 0 else -1
