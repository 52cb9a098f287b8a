"""Backend selection for the clause-evaluation kernels.

The compiled extension is used when it was built; setting PMAX_PURE=1 forces the
numpy fallback. Both backends take an int8 assignment table (one row per
assignment), a flat array of signed literals and clause offsets into it.
"""

from __future__ import annotations

import os

import numpy as np

from . import _pykernels
from .formula import Mode

MODE_CODES = {"sat": 0, "nae": 1, "exact": 2, "term": 3}

try:
    if os.environ.get("PMAX_PURE"):
        raise ImportError("pure backend requested")
    from . import _ckernels as _backend

    BACKEND = "compiled"
except ImportError:
    _backend = _pykernels
    BACKEND = "python"


def pack_clauses(clauses) -> tuple[np.ndarray, np.ndarray]:
    lits = np.fromiter((lit for c in clauses for lit in c), dtype=np.int32)
    offsets = np.zeros(len(clauses) + 1, dtype=np.int32)
    offsets[1:] = np.cumsum([len(c) for c in clauses], dtype=np.int64)
    return lits, offsets


def count_rows(table: np.ndarray, clauses, mode: Mode, backend=None) -> np.ndarray:
    """Satisfied-clause count for every row of ``table``."""
    lits, offsets = pack_clauses(clauses)
    impl = backend or _backend
    return impl.count_rows(np.ascontiguousarray(table, dtype=np.int8), lits, offsets, MODE_CODES[mode.kind], mode.x)


def first_reaching(table: np.ndarray, clauses, mode: Mode, k: int, backend=None) -> int:
    """Index of the first row satisfying at least ``k`` clauses, or -1."""
    lits, offsets = pack_clauses(clauses)
    impl = backend or _backend
    return int(impl.first_reaching(np.ascontiguousarray(table, dtype=np.int8), lits, offsets, MODE_CODES[mode.kind], mode.x, k))
