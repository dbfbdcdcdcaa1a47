# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled window-notation kernels; twin of _windows_py with the same API.

Windows are plain Python tuples at the boundary and C int arrays inside.
Rank is capped at 64, far above every enumeration bound in the package.
"""

BACKEND_NAME = "c"

DEF MAXN = 64


cdef inline int _load(tuple a, int* buf) except -1:
    cdef int n = len(a)
    cdef int i
    if n > MAXN:
        raise ValueError("rank too large for compiled kernels")
    for i in range(n):
        buf[i] = a[i]
    return n


cdef inline tuple _store(int* buf, int n):
    cdef int i
    return tuple([buf[i] for i in range(n)])


def identity_window(int n):
    cdef int i
    return tuple([i for i in range(1, n + 1)])


def apply_window(tuple w, int i):
    if i > 0:
        return w[i - 1]
    return -w[-i - 1]


cdef inline void _compose(int* a, int* b, int* out, int n) noexcept:
    cdef int i, j
    for i in range(n):
        j = b[i]
        if j > 0:
            out[i] = a[j - 1]
        else:
            out[i] = -a[-j - 1]


def compose(tuple a, tuple b):
    cdef int wa[MAXN]
    cdef int wb[MAXN]
    cdef int out[MAXN]
    cdef int n = _load(a, wa)
    _load(b, wb)
    _compose(wa, wb, out, n)
    return _store(out, n)


cdef inline void _inverse(int* a, int* out, int n) noexcept:
    cdef int i, j
    for i in range(n):
        j = a[i]
        if j > 0:
            out[j - 1] = i + 1
        else:
            out[-j - 1] = -(i + 1)


def inverse(tuple a):
    cdef int wa[MAXN]
    cdef int out[MAXN]
    cdef int n = _load(a, wa)
    _inverse(wa, out, n)
    return _store(out, n)


def power(tuple a, long k):
    cdef int base[MAXN]
    cdef int res[MAXN]
    cdef int tmp[MAXN]
    cdef int buf[MAXN]
    cdef int n = _load(a, base)
    cdef int i
    if k < 0:
        _inverse(base, tmp, n)
        for i in range(n):
            base[i] = tmp[i]
        k = -k
    for i in range(n):
        res[i] = i + 1
    while k:
        if k & 1:
            _compose(base, res, tmp, n)
            for i in range(n):
                res[i] = tmp[i]
        k >>= 1
        if k:
            _compose(base, base, buf, n)
            for i in range(n):
                base[i] = buf[i]
    return _store(res, n)


def cycle_type(tuple a):
    cdef int w[MAXN]
    cdef bint seen[MAXN]
    cdef int n = _load(a, w)
    cdef int s, j, t, length, sign
    cdef list plus = []
    cdef list minus = []
    for s in range(n):
        seen[s] = False
    for s in range(1, n + 1):
        if seen[s - 1]:
            continue
        length = 0
        sign = 1
        j = s
        while not seen[j - 1]:
            seen[j - 1] = True
            length += 1
            t = w[j - 1]
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


def window_chi(tuple a):
    cdef int w[MAXN]
    cdef int n = _load(a, w)
    cdef int i, s = 1
    for i in range(n):
        if w[i] < 0:
            s = -s
    return s


def window_chi_prime(tuple a):
    cdef int w[MAXN]
    cdef bint seen[MAXN]
    cdef int n = _load(a, w)
    cdef int s, j, cycles = 0
    for s in range(n):
        seen[s] = False
    for s in range(1, n + 1):
        if seen[s - 1]:
            continue
        cycles += 1
        j = s
        while not seen[j - 1]:
            seen[j - 1] = True
            j = w[j - 1]
            if j < 0:
                j = -j
    if (n - cycles) % 2 == 0:
        return 1
    return -1
