"""Backend switch for the hot kernels.

``OMEGA_BACKEND=numba`` (default) compiles the scalar kernels with ``numba.njit``;
``OMEGA_BACKEND=numpy`` runs them as plain Python and swaps the bulk kernels for
vectorised numpy versions.  The choice is made once, at import time.
"""
import os

BACKEND = os.environ.get("OMEGA_BACKEND", "numba").strip().lower()

if BACKEND not in ("numba", "numpy"):
    raise ImportError(f"OMEGA_BACKEND must be 'numba' or 'numpy', got {BACKEND!r}")

if BACKEND == "numba":
    try:
        import numba
    except ImportError:  # pragma: no cover - numba is an optional speedup
        BACKEND = "numpy"

USE_NUMBA = BACKEND == "numba"


def jit(fn):
    if USE_NUMBA:
        return numba.njit(cache=True)(fn)
    return fn
