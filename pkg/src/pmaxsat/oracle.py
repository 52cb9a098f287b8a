"""Exhaustive reference solvers. No pruning: every answer comes from full enumeration."""

from __future__ import annotations

from itertools import combinations

import numpy as np

from .formula import HARD, SAT, TERM, CnfFormula, DnfFormula, Mode, WeightedCnf, checked_sum
from .graph import Graph

MAX_VARS = 24
MAX_ALMOST_CLAUSES = 20
MAX_FLOW_VERTICES = 22
MAX_HALF_LP_VERTICES = 12
MAX_VC_VERTICES = 24
CHUNK_BITS = 16


class OracleLimitError(ValueError):
    pass


def _assignment_chunks(n: int):
    """Yield (offset, table) with table rows in increasing lexicographic order.

    Row r of the whole enumeration is the assignment whose bits, read x1 first,
    spell r in binary, so earlier rows are lexicographically smaller.
    """
    total = 1 << n
    step = 1 << min(n, CHUNK_BITS)
    shifts = np.arange(n - 1, -1, -1, dtype=np.int64)
    for start in range(0, total, step):
        rows = np.arange(start, min(total, start + step), dtype=np.int64)
        yield start, ((rows[:, None] >> shifts) & 1).astype(np.int8)


def _row_assignment(n: int, row: int) -> tuple[int, ...]:
    return tuple((row >> (n - 1 - j)) & 1 for j in range(n))


def _clause_truth(table: np.ndarray, clause, mode: Mode) -> np.ndarray:
    hits = np.zeros(table.shape[0], dtype=np.int16)
    for lit in clause:
        col = table[:, abs(lit) - 1]
        hits += col if lit > 0 else 1 - col
    if mode.kind == "sat":
        return hits >= 1
    if mode.kind == "nae":
        return (hits >= 1) & (hits < len(clause))
    if mode.kind == "term":
        return hits == len(clause)
    return hits == mode.x


def _guard(n: int):
    if n > MAX_VARS:
        raise OracleLimitError(f"n={n} exceeds the oracle guard {MAX_VARS}")


def _rows(f: CnfFormula | DnfFormula, mode: Mode | None):
    if isinstance(f, DnfFormula):
        return f.terms, mode or TERM
    return f.clauses, mode or SAT


def _counts(table, rows, mode) -> np.ndarray:
    total = np.zeros(table.shape[0], dtype=np.int32)
    for clause in rows:
        total += _clause_truth(table, clause, mode)
    return total


def brute_max(f: CnfFormula | DnfFormula, mode: Mode | None = None) -> tuple[int, tuple[int, ...]]:
    """Maximum satisfied count and its lexicographically least witness."""
    _guard(f.n)
    rows, mode = _rows(f, mode)
    best, best_row = -1, 0
    for start, table in _assignment_chunks(f.n):
        counts = _counts(table, rows, mode)
        i = int(np.argmax(counts))
        if counts[i] > best:
            best, best_row = int(counts[i]), start + i
    return best, _row_assignment(f.n, best_row)


def brute_min_sat(f: CnfFormula) -> tuple[int, tuple[int, ...]]:
    _guard(f.n)
    best, best_row = None, 0
    for start, table in _assignment_chunks(f.n):
        counts = _counts(table, f.clauses, SAT)
        i = int(np.argmin(counts))
        if best is None or counts[i] < best:
            best, best_row = int(counts[i]), start + i
    return best, _row_assignment(f.n, best_row)


def brute_weighted(wf: WeightedCnf) -> tuple[int | None, tuple[int, ...] | None]:
    """Best soft weight among assignments satisfying every hard clause; (None, None) if none do."""
    _guard(wf.n)
    total = checked_sum(w for w in wf.weights if w is not HARD)
    dtype = np.int64 if total < 2**62 else object
    best, best_row = None, None
    for start, table in _assignment_chunks(wf.n):
        feasible = np.ones(table.shape[0], dtype=bool)
        soft = np.zeros(table.shape[0], dtype=dtype)
        for clause, w in zip(wf.clauses, wf.weights):
            truth = _clause_truth(table, clause, SAT)
            if w is HARD:
                feasible &= truth
            else:
                soft = soft + truth.astype(dtype) * w
        idx = np.flatnonzero(feasible)
        if len(idx) == 0:
            continue
        values = soft[idx]
        j = int(np.argmax(values)) if dtype is np.int64 else max(range(len(idx)), key=lambda t: (values[t], -t))
        if best is None or values[j] > best:
            best, best_row = int(values[j]), start + int(idx[j])
    if best is None:
        return None, None
    return best, _row_assignment(wf.n, best_row)


def brute_vertex_cover(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Smallest cover, trying subsets by size; witness is the lexicographically least such subset."""
    if g.n > MAX_VC_VERTICES:
        raise OracleLimitError(f"{g.n} vertices exceed the oracle guard")
    for size in range(g.n + 1):
        for subset in combinations(range(g.n), size):
            chosen = set(subset)
            if all(u in chosen or v in chosen for u, v in g.edges):
                return size, subset
    raise AssertionError("the full vertex set is always a cover")


def brute_max_flow(net) -> int:
    """Max flow via the minimum s-t cut over every vertex bipartition (unit capacities)."""
    inner = [v for v in range(net.n) if v not in (net.s, net.t)]
    if len(inner) + 2 > MAX_FLOW_VERTICES:
        raise OracleLimitError("network too large for cut enumeration")
    if net.s == net.t:
        raise OracleLimitError("source equals sink")
    rows = np.arange(1 << len(inner), dtype=np.int64)
    side = np.zeros((len(rows), net.n), dtype=bool)
    side[:, net.s] = True
    for j, v in enumerate(inner):
        side[:, v] = (rows >> j) & 1
    cut = np.zeros(len(rows), dtype=np.int64)
    for u, v in net.arcs:
        cut += side[:, u] & ~side[:, v]
    return int(cut.min())


def brute_capacitated_max_flow(n: int, arcs, s: int, t: int) -> int:
    """Same cut enumeration for arcs (u, v, capacity)."""
    inner = [v for v in range(n) if v not in (s, t)]
    if len(inner) + 2 > MAX_FLOW_VERTICES:
        raise OracleLimitError("network too large for cut enumeration")
    rows = np.arange(1 << len(inner), dtype=np.int64)
    side = np.zeros((len(rows), n), dtype=bool)
    side[:, s] = True
    for j, v in enumerate(inner):
        side[:, v] = (rows >> j) & 1
    cut = np.zeros(len(rows), dtype=np.int64)
    for u, v, c in arcs:
        cut += c * (side[:, u] & ~side[:, v])
    return int(cut.min())


def _half_lp_totals(g: Graph) -> np.ndarray:
    """Objective values of every feasible {0, 1/2, 1} vertex-cover LP point, in half-units."""
    if g.n > MAX_HALF_LP_VERTICES:
        raise OracleLimitError(f"{g.n} vertices exceed the oracle guard")
    rest = np.arange(3**g.n, dtype=np.int64)
    values = np.zeros((len(rest), g.n), dtype=np.int8)
    for v in range(g.n):
        values[:, v] = rest % 3
        rest //= 3
    feasible = np.ones(len(values), dtype=bool)
    for u, v in g.edges:
        feasible &= values[:, u] + values[:, v] >= 2
    return values[feasible].sum(axis=1)


def brute_halfintegral_vc(g: Graph) -> int:
    """Optimum of the vertex-cover LP over {0, 1/2, 1} values, in half-units."""
    return int(_half_lp_totals(g).min())


def count_halfintegral_optima(g: Graph) -> int:
    """Number of optimal {0, 1/2, 1} vertex-cover LP solutions."""
    totals = _half_lp_totals(g)
    return int((totals == totals.min()).sum())


def brute_almost(f: CnfFormula, mode: Mode | None = None) -> int:
    """Fewest clause deletions leaving a mode-satisfiable rest, trying deletion sets smallest first."""
    _guard(f.n)
    if f.m > MAX_ALMOST_CLAUSES:
        raise OracleLimitError(f"m={f.m} exceeds the oracle guard")
    mode = mode or SAT
    masks = set()
    for _, table in _assignment_chunks(f.n):
        failing = np.zeros(table.shape[0], dtype=np.int64)
        for i, clause in enumerate(f.clauses):
            failing |= (~_clause_truth(table, clause, mode)).astype(np.int64) << i
        masks.update(int(x) for x in np.unique(failing))
    for size in range(f.m + 1):
        for deleted in combinations(range(f.m), size):
            dmask = sum(1 << i for i in deleted)
            if any(mask & ~dmask == 0 for mask in masks):
                return size
    raise AssertionError("deleting everything always works")
