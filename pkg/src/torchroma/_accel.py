"""JIT switch for the hot kernels.

Kernels are written once as plain numpy-on-arrays Python and compiled with
``numba.njit`` when numba is importable and ``TORCHROMA_DISABLE_NUMBA`` is
unset (or ``0``). The undecorated function is always reachable as
``kernel.py_func`` so benchmarks and tests can run both paths.
"""

import os

_FLAG = os.environ.get("TORCHROMA_DISABLE_NUMBA", "").strip().lower()
DISABLED = _FLAG not in ("", "0", "false", "no")

try:
    if DISABLED:
        raise ImportError("disabled by TORCHROMA_DISABLE_NUMBA")
    import numba

    HAVE_NUMBA = True
except ImportError:
    numba = None
    HAVE_NUMBA = False


def njit(func):
    """Compile ``func`` in nopython mode, or return it untouched."""
    if HAVE_NUMBA:
        compiled = numba.njit(cache=True)(func)
        return compiled

    func.py_func = func
    return func
