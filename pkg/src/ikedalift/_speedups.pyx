# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twins of the _kernels_py loops.

Coefficients stay arbitrary Python objects (int, Fraction, QuadExt), so the
arithmetic is exactly the same as in the pure kernels; only the loop and
indexing overhead is compiled away.
"""


def convolve(list a, list b):
    """Full convolution of two coefficient lists (polynomial product)."""
    cdef Py_ssize_t na = len(a), nb = len(b), i, j
    if na == 0 or nb == 0:
        return []
    cdef list out = [0] * (na + nb - 1)
    cdef object ai, bj
    for i in range(na):
        ai = a[i]
        if ai == 0:
            continue
        for j in range(nb):
            bj = b[j]
            if bj == 0:
                continue
            out[i + j] = out[i + j] + ai * bj
    return out


def convolve_trunc(list a, list b, Py_ssize_t n):
    """First n coefficients of the convolution (truncated series product)."""
    cdef Py_ssize_t na = len(a), nb = len(b), i, j, nout, jmax
    if na == 0 or nb == 0 or n <= 0:
        return []
    nout = na + nb - 1
    if n < nout:
        nout = n
    cdef list out = [0] * nout
    cdef object ai, bj
    for i in range(min(na, nout)):
        ai = a[i]
        if ai == 0:
            continue
        jmax = nb if nb < nout - i else nout - i
        for j in range(jmax):
            bj = b[j]
            if bj == 0:
                continue
            out[i + j] = out[i + j] + ai * bj
    return out


def horner(list coeffs, object x):
    """Evaluate the polynomial with the given coefficient list at x."""
    cdef Py_ssize_t i
    cdef object acc = 0
    for i in range(len(coeffs) - 1, -1, -1):
        acc = acc * x + coeffs[i]
    return acc
