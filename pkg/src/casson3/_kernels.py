"""Float-path kernels for the cotangent sums.

The hot loop is sum_{m=1}^{n-1} cot(pi*A*m/n) * cot(pi*m/n) * sin^2(pi*e*m/n).
Two implementations are provided: a numba @njit scalar loop with Kahan
compensation, and a pure-numpy vectorized fallback.  Selection:

    CASSON3_BACKEND = auto (default) | numba | numpy

Both reduce A*m and e*m modulo n in integers first, so no trig argument ever
exceeds pi and the per-term rounding stays at machine epsilon.
"""
from __future__ import annotations

import math
import os

import numpy as np

_EPS = float(np.finfo(np.float64).eps)

try:
    from numba import njit

    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba installed
    _HAVE_NUMBA = False


def _cot_sum_python(A: int, e: int, n: int) -> tuple[float, float]:
    """Reference scalar loop (also the jit source)."""
    A %= n
    e %= n
    total = 0.0
    comp = 0.0
    largest = 0.0
    for m in range(1, n):
        t1 = (A * m) % n
        t2 = (e * m) % n
        x1 = math.pi * t1 / n
        x2 = math.pi * m / n
        s = math.sin(math.pi * t2 / n)
        term = (math.cos(x1) / math.sin(x1)) * (math.cos(x2) / math.sin(x2)) * s * s
        if abs(term) > largest:
            largest = abs(term)
        y = term - comp
        t = total + y
        comp = (t - total) - y
        total = t
    if abs(total) > largest:
        largest = abs(total)
    # the + n covers argument rounding through the near-pole cotangents
    return total, (n - 1) * _EPS * (largest + n)


if _HAVE_NUMBA:
    _cot_sum_numba = njit(cache=False, nogil=True)(_cot_sum_python)


def cot_sum_numpy(A: int, e: int, n: int) -> tuple[float, float]:
    """Vectorized fallback; same value and error-bound contract."""
    A %= n
    e %= n
    m = np.arange(1, n, dtype=np.int64)
    x1 = np.pi * ((A * m) % n) / n
    x2 = np.pi * m / n
    s = np.sin(np.pi * ((e * m) % n) / n)
    terms = (np.cos(x1) / np.sin(x1)) * (np.cos(x2) / np.sin(x2)) * s * s
    total = float(np.sum(terms))
    largest = max(float(np.max(np.abs(terms))), abs(total)) if n > 1 else 0.0
    return total, (n - 1) * _EPS * (largest + n)


def cot_sum_numba(A: int, e: int, n: int) -> tuple[float, float]:
    if not _HAVE_NUMBA:
        raise RuntimeError("numba is not installed; use the numpy backend")
    return _cot_sum_numba(A, e, n)


def active_backend() -> str:
    """Backend the dispatcher will use right now: 'numba' or 'numpy'."""
    choice = os.environ.get("CASSON3_BACKEND", "auto").lower()
    if choice == "numpy":
        return "numpy"
    if choice == "numba":
        if not _HAVE_NUMBA:
            raise RuntimeError("CASSON3_BACKEND=numba but numba is not importable")
        return "numba"
    if choice != "auto":
        raise ValueError(f"unknown CASSON3_BACKEND {choice!r}")
    return "numba" if _HAVE_NUMBA else "numpy"


def using_numba() -> bool:
    return active_backend() == "numba"


def cot_sum(A: int, e: int, n: int) -> tuple[float, float]:
    """(value, conservative error bound) of the cotangent sum, via the active backend."""
    if active_backend() == "numba":
        return cot_sum_numba(A, e, n)
    return cot_sum_numpy(A, e, n)
