"""Numba acceleration toggle for the hot kernels.

Set the environment variable ``XMB_NO_NUMBA=1`` to run the kernels in
``xmb._kernels`` as plain Python over NumPy arrays instead of JIT-compiling
them. Both paths execute the same source and produce identical results;
the flag exists for debugging and for benchmarking the fallback
(see ``benchmarks/bench_kernels.py``).
"""

import os

try:
    import numba
except ImportError:
    numba = None

HAS_NUMBA = numba is not None
NUMBA_DISABLED = os.environ.get("XMB_NO_NUMBA", "").strip().lower() in ("1", "true", "yes", "on")
USE_NUMBA = HAS_NUMBA and not NUMBA_DISABLED

_NUMBA_OPTS = {"cache": True, "nogil": True}


def maybe_jit(func):
    """Compile with numba when enabled, otherwise return the function unchanged."""
    if USE_NUMBA:
        return numba.njit(**_NUMBA_OPTS)(func)
    return func
