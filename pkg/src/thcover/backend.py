"""Kernel backend selection.

THCOVER_BACKEND=numpy forces the pure-numpy kernels, THCOVER_BACKEND=numba
requires the compiled ones (ImportError if numba is missing).  Unset, numba
is used when available.  Both modules export the same functions with
identical results, so callers just do `from .backend import kernels`.
"""

from __future__ import annotations

import os


def _load():
    choice = os.environ.get("THCOVER_BACKEND", "").strip().lower()
    if choice not in ("", "numba", "numpy"):
        raise ValueError(f"THCOVER_BACKEND must be 'numba' or 'numpy', got {choice!r}")
    if choice != "numpy":
        try:
            from . import _kernels_numba

            return _kernels_numba, "numba"
        except ImportError:
            if choice == "numba":
                raise
    from . import _kernels_numpy

    return _kernels_numpy, "numpy"


kernels, backend_name = _load()
