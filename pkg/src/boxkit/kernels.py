"""Backend selection for the search kernels.

The compiled extension is used when it imports and ``BOXKIT_PURE_PYTHON``
is not set to ``1``.  ``BACKEND`` names the choice.
"""

from __future__ import annotations

import os

from boxkit import _pykernels
from boxkit._pykernels import SearchBudgetExceeded

_ext = None
if os.environ.get("BOXKIT_PURE_PYTHON") != "1":
    try:
        from boxkit import _ckernels as _ext
    except ImportError:
        _ext = None

BACKEND = "cython" if _ext is not None else "python"
ENUM_MAX_VERTICES = _ext.MAX_VERTICES if _ext is not None else None


def get_backend(name: str | None = None):
    """Kernel module by name (``"cython"``, ``"python"``) or the default."""
    if name is None:
        name = BACKEND
    if name == "python":
        return _pykernels
    if name == "cython":
        if _ext is None:
            raise RuntimeError("compiled kernels are not available")
        return _ext
    raise ValueError(f"unknown backend {name!r}")


def prefix_terminals(n, adj, eidx, first, backend=None):
    mod = get_backend(backend)
    if mod is _ext and (n > _ext.MAX_VERTICES or sum(a.bit_count() for a in adj) // 2 > _ext.MAX_EDGES):
        mod = _pykernels
    return mod.prefix_terminals(n, adj, eidx, list(first))


def cover_search(universe, cands, k, top=None, budget=None, backend=None):
    return get_backend(backend).cover_search(universe, cands, k, top, budget)


def cover_problem(universe, cands, backend=None):
    """Prepared cover instance with a ``search(k, top, budget)`` method."""
    return get_backend(backend).CoverProblem(universe, cands)


def first_branch_options(universe, cands):
    return _pykernels.first_branch_options(universe, cands)


__all__ = [
    "BACKEND",
    "SearchBudgetExceeded",
    "cover_problem",
    "cover_search",
    "first_branch_options",
    "get_backend",
    "prefix_terminals",
]
