"""Pure-Python reference kernels for the hot inner loops.

These operate on plain lists of exact scalars (int, Fraction, QuadExt); all
arithmetic goes through the objects themselves, so results are exact in any
coefficient ring.  ikedalift.kernels selects the compiled twin of this module
when it is available.
"""


def convolve(a, b):
    """Full convolution of two coefficient lists (polynomial product)."""
    na, nb = len(a), len(b)
    if na == 0 or nb == 0:
        return []
    out = [0] * (na + nb - 1)
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


def convolve_trunc(a, b, n):
    """First n coefficients of the convolution (truncated series product)."""
    na, nb = len(a), len(b)
    if na == 0 or nb == 0 or n <= 0:
        return []
    out = [0] * min(n, na + nb - 1)
    nout = len(out)
    for i in range(min(na, nout)):
        ai = a[i]
        if ai == 0:
            continue
        jmax = min(nb, nout - i)
        for j in range(jmax):
            bj = b[j]
            if bj == 0:
                continue
            out[i + j] = out[i + j] + ai * bj
    return out


def horner(coeffs, x):
    """Evaluate the polynomial with the given coefficient list at x."""
    acc = 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc
