"""Hot kernels.

The compiled extension is used when it was built; otherwise, or when the
environment variable ``PLETHYSTAB_PURE`` is set to a non-empty value, the
pure-Python implementation is selected.  ``BACKEND`` names the active one.
"""
import os
import sys

from . import _count_py

if os.environ.get("PLETHYSTAB_PURE"):
    _compiled = None
else:
    try:
        from . import _count as _compiled
    except ImportError:
        _compiled = None

BACKEND = "cython" if _compiled is not None else "python"
_impl = (_compiled or _count_py).count_matrix_points


def _ensure_depth(rows, weights) -> None:
    depth = len(rows) * (len(weights) + 1) + 100
    if depth > sys.getrecursionlimit():
        sys.setrecursionlimit(depth)


def count_matrix_points(row_sums, weights, mults, target) -> int:
    _ensure_depth(row_sums, weights)
    return _impl(row_sums, weights, mults, target)


def count_matrix_points_py(row_sums, weights, mults, target) -> int:
    _ensure_depth(row_sums, weights)
    return _count_py.count_matrix_points(row_sums, weights, mults, target)


def count_matrix_points_compiled(row_sums, weights, mults, target) -> int:
    if _compiled is None:
        raise RuntimeError("compiled kernel not available")
    _ensure_depth(row_sums, weights)
    return _compiled.count_matrix_points(row_sums, weights, mults, target)


__all__ = ["BACKEND", "count_matrix_points", "count_matrix_points_py",
           "count_matrix_points_compiled"]
