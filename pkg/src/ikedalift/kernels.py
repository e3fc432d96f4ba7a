"""Kernel backend selection.

Prefers the compiled extension (_speedups) and falls back to the pure-Python
kernels.  Set IKEDALIFT_PURE=1 to force the pure backend; BACKEND reports
which one is live.  Both backends are exact and bit-for-bit interchangeable.
"""

import os

if os.environ.get("IKEDALIFT_PURE") == "1":
    from ._kernels_py import convolve, convolve_trunc, horner

    BACKEND = "python"
else:
    try:
        from ._speedups import convolve, convolve_trunc, horner

        BACKEND = "cython"
    except ImportError:
        from ._kernels_py import convolve, convolve_trunc, horner

        BACKEND = "python"

__all__ = ["convolve", "convolve_trunc", "horner", "BACKEND"]
