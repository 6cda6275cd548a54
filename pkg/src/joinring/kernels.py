"""Prime-field kernels, compiled when available.

The Cython module ``_kernels_c`` is used if it was built; otherwise the
pure-Python ``_kernels_py`` is used. Setting ``JOINRING_PURE_PYTHON=1`` forces
the fallback. ``BACKEND`` names the active implementation.
"""
from __future__ import annotations

import os

from . import _kernels_py

if os.environ.get("JOINRING_PURE_PYTHON"):
    _impl = _kernels_py
else:
    try:
        from . import _kernels_c as _impl
    except ImportError:
        _impl = _kernels_py

BACKEND = "cython" if _impl is not _kernels_py else "python"

matmul_mod = _impl.matmul_mod
convolve_mod = _impl.convolve_mod
row_reduce_mod = _impl.row_reduce_mod

__all__ = ["BACKEND", "matmul_mod", "convolve_mod", "row_reduce_mod"]
