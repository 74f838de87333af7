"""Rank/closure kernels for integer row matrices.

The compiled extension ``tcarr._kernels`` is used when it imported cleanly;
otherwise, or when ``TCARR_PURE=1`` is set, the pure-Python module is used.
A compiled call that overflows int64 is retried with Python integers.
"""
import os

import numpy as np

from . import _kernels_py

try:
    from . import _kernels as _ext
except ImportError:  # extension not built
    _ext = None

if os.environ.get("TCARR_PURE", "") not in ("", "0"):
    _ext = None

BACKEND = "cython" if _ext is not None else "python"


class IntegerRowKernel:
    """Exact rank and span queries on a fixed list of integer rows."""

    def __init__(self, rows, backend=None):
        self.rows = [tuple(int(x) for x in r) for r in rows]
        backend = backend or BACKEND
        if backend == "cython" and _ext is None:
            raise RuntimeError("compiled kernel is not available")
        self.backend = backend
        self._arr = None
        if backend == "cython":
            big = max((abs(x) for r in self.rows for x in r), default=0)
            if big < 2**62:
                self._arr = np.ascontiguousarray(self.rows, dtype=np.int64)
                if self._arr.ndim != 2:
                    self._arr = None
            if self._arr is None:
                self.backend = "python"

    def rank(self, idx):
        if self._arr is not None:
            try:
                return _ext.rank_rows(self._arr, idx)
            except OverflowError:
                pass
        return _kernels_py.rank_rows(self.rows, idx)

    def closure(self, idx):
        """Return ``(rank, members)`` where members are all rows in the span of ``idx``."""
        if self._arr is not None:
            try:
                return _ext.closure_rows(self._arr, idx)
            except OverflowError:
                pass
        return _kernels_py.closure_rows(self.rows, idx)
