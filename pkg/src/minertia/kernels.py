"""Float fast-path backend selection.

The compiled extension is preferred when importable; the numpy fallback is
behaviorally identical (up to floating-point noise) and is always used for
matrices larger than the compiled kernel's fixed buffers.  Set
MINERTIA_PURE=1 to force the fallback.
"""

from __future__ import annotations

import os

import numpy as np

from . import _kernels_py

_COMPILED = None
if os.environ.get("MINERTIA_PURE") != "1":
    try:
        from . import _kernels as _COMPILED  # type: ignore[no-redef]
    except ImportError:
        _COMPILED = None

#: Size cap of the compiled kernel's stack buffers.
COMPILED_MAX_Q = 32

BACKEND = _COMPILED.BACKEND if _COMPILED is not None else _kernels_py.BACKEND


def available_backends():
    names = ["numpy"]
    if _COMPILED is not None:
        names.insert(0, "compiled")
    return names


def _impl(q: int):
    if _COMPILED is not None and q <= COMPILED_MAX_Q:
        return _COMPILED
    return _kernels_py


def eig_ascending(a: np.ndarray) -> np.ndarray:
    return _impl(a.shape[0]).eig_ascending(a)


def sign_counts(a: np.ndarray, tol: float):
    return _impl(a.shape[0]).sign_counts(a, tol)


def batch_stats(basis: np.ndarray, coeffs: np.ndarray, tol: float):
    return _impl(basis.shape[1]).batch_stats(basis, coeffs, tol)


def coordinate_descent(basis: np.ndarray, c0: np.ndarray, sweeps: int, margin: float):
    return _impl(basis.shape[1]).coordinate_descent(basis, c0, sweeps, margin)
