"""Kernel backend selection.

The hot inner loops (im2col / col2im gather-scatter and the fused Adam
update) exist twice: a numba-jitted version and a pure-numpy fallback.
``AVSS_BACKEND=numpy`` forces the fallback, ``AVSS_BACKEND=numba``
requires numba and raises if it cannot be imported; by default numba is
used when available. Everything outside these kernels (GEMMs, FFTs,
reductions) is plain numpy either way.
"""

from __future__ import annotations

import os

from . import kernels_numpy

_ENV_VAR = "AVSS_BACKEND"
_VALID = ("numba", "numpy")

try:
    from . import kernels_numba

    _NUMBA_OK = True
    _NUMBA_ERR: Exception | None = None
except ImportError as exc:  # pragma: no cover - depends on environment
    kernels_numba = None  # type: ignore[assignment]
    _NUMBA_OK = False
    _NUMBA_ERR = exc


def _default_backend() -> str:
    requested = os.environ.get(_ENV_VAR, "").strip().lower()
    if requested:
        if requested not in _VALID:
            raise ValueError(
                f"{_ENV_VAR} must be one of {_VALID}, got {requested!r}"
            )
        if requested == "numba" and not _NUMBA_OK:
            raise ImportError(
                f"{_ENV_VAR}=numba but numba is unavailable: {_NUMBA_ERR}"
            )
        return requested
    return "numba" if _NUMBA_OK else "numpy"


_ACTIVE = _default_backend()


def active_backend() -> str:
    """Name of the kernel backend currently in use."""
    return _ACTIVE


def set_backend(name: str) -> str:
    """Switch kernel backend at runtime; returns the previous name."""
    global _ACTIVE
    if name not in _VALID:
        raise ValueError(f"backend must be one of {_VALID}, got {name!r}")
    if name == "numba" and not _NUMBA_OK:
        raise ImportError(f"numba backend unavailable: {_NUMBA_ERR}")
    previous = _ACTIVE
    _ACTIVE = name
    return previous


def kernels():
    """Module providing im2col / col2im / adam_update for the active backend."""
    return kernels_numba if _ACTIVE == "numba" else kernels_numpy


def configure_threads() -> int | None:
    """Apply the AVSS_THREADS cap to numba's thread pool, if set.

    BLAS thread counts are controlled by the usual OMP/OPENBLAS variables
    and must be set before numpy is first imported, so only the numba
    pool is adjusted here. Returns the applied cap or None.
    """
    raw = os.environ.get("AVSS_THREADS", "").strip()
    if not raw:
        return None
    n = int(raw)
    if n < 1:
        raise ValueError(f"AVSS_THREADS must be >= 1, got {raw!r}")
    if _NUMBA_OK:
        import numba

        numba.set_num_threads(min(n, numba.config.NUMBA_NUM_THREADS))
    return n
