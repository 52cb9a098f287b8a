# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled clause-evaluation kernels; same contract as _pykernels."""

import numpy as np

cdef enum:
    SAT = 0
    NAE = 1
    EXACT = 2
    TERM = 3


cdef inline bint _passes(int hits, int width, int mode, int x) noexcept nogil:
    if mode == SAT:
        return hits >= 1
    if mode == NAE:
        return hits >= 1 and hits < width
    if mode == TERM:
        return hits == width
    return hits == x


cdef int _row_count(const signed char* row, const int* lits, const int* offsets,
                    Py_ssize_t m, int mode, int x) noexcept nogil:
    cdef Py_ssize_t c, j
    cdef int hits, lit, count = 0
    for c in range(m):
        hits = 0
        for j in range(offsets[c], offsets[c + 1]):
            lit = lits[j]
            if lit > 0:
                hits += row[lit - 1]
            else:
                hits += 1 - row[-lit - 1]
        if _passes(hits, offsets[c + 1] - offsets[c], mode, x):
            count += 1
    return count


def count_rows(const signed char[:, ::1] table, const int[::1] lits, const int[::1] offsets, int mode, int x):
    # column-major pass: one contiguous sweep over the rows per literal
    cdef Py_ssize_t rows = table.shape[0]
    cdef Py_ssize_t m = offsets.shape[0] - 1
    out = np.zeros(rows, dtype=np.int32)
    if rows == 0 or m == 0:
        return out
    cols_arr = np.ascontiguousarray(np.asarray(table).T)
    hits_arr = np.empty(rows, dtype=np.int32)
    cdef const signed char[:, ::1] cols = cols_arr
    cdef int[::1] total = out
    cdef int[::1] hits = hits_arr
    cdef Py_ssize_t c, j, r
    cdef int lit, width, lo, hi
    cdef const signed char* col
    with nogil:
        for c in range(m):
            width = offsets[c + 1] - offsets[c]
            for r in range(rows):
                hits[r] = 0
            for j in range(offsets[c], offsets[c + 1]):
                lit = lits[j]
                if lit > 0:
                    col = &cols[lit - 1, 0]
                    for r in range(rows):
                        hits[r] += col[r]
                else:
                    col = &cols[-lit - 1, 0]
                    for r in range(rows):
                        hits[r] += 1 - col[r]
            if mode == SAT:
                lo, hi = 1, width
            elif mode == NAE:
                lo, hi = 1, width - 1
            elif mode == TERM:
                lo, hi = width, width
            else:
                lo, hi = x, x
            for r in range(rows):
                total[r] += (hits[r] >= lo) & (hits[r] <= hi)
    return out


def first_reaching(const signed char[:, ::1] table, const int[::1] lits, const int[::1] offsets,
                   int mode, int x, int k):
    cdef Py_ssize_t r, rows = table.shape[0], width = table.shape[1]
    cdef Py_ssize_t m = offsets.shape[0] - 1
    cdef Py_ssize_t found = -1
    if rows == 0:
        return -1
    cdef const signed char* base = &table[0, 0] if width else NULL
    cdef const int* lp = &lits[0] if lits.shape[0] else NULL
    cdef const int* op = &offsets[0]
    with nogil:
        for r in range(rows):
            if _row_count(base + r * width, lp, op, m, mode, x) >= k:
                found = r
                break
    return found
