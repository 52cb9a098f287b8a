"""Vectorised numpy versions of the clause-evaluation kernels."""

import numpy as np

SAT, NAE, EXACT, TERM = 0, 1, 2, 3


def count_rows(table, lits, offsets, mode, x):
    table = np.asarray(table, dtype=np.int8)
    total = np.zeros(table.shape[0], dtype=np.int32)
    for c in range(len(offsets) - 1):
        clause = lits[offsets[c]:offsets[c + 1]]
        hits = np.zeros(table.shape[0], dtype=np.int32)
        for lit in clause:
            col = table[:, abs(int(lit)) - 1]
            hits += col if lit > 0 else 1 - col
        width = len(clause)
        if mode == SAT:
            ok = hits >= 1
        elif mode == NAE:
            ok = (hits >= 1) & (hits < width)
        elif mode == TERM:
            ok = hits == width
        else:
            ok = hits == x
        total += ok
    return total


def first_reaching(table, lits, offsets, mode, x, k):
    hits = np.flatnonzero(count_rows(table, lits, offsets, mode, x) >= k)
    return int(hits[0]) if len(hits) else -1
