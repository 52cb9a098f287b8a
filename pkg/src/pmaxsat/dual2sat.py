"""Almost-2SAT and almost-NAE-2SAT through vertex cover above a perfect matching.

Chain: nae clauses -> 2-CNF -> variable deletion on per-occurrence copies ->
graph with literal vertices x+ / x- whose variable edges form a perfect matching.
Every stage records enough to map a vertex cover back to deleted clauses and an
assignment, which is then checked against the input.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .formula import NAE, SAT, CnfFormula, FormulaError, Mode, eval_clause
from .graph import Graph
from .vcmatch import solve_vc_above_matching


def _check_width(f: CnfFormula):
    for c in f.clauses:
        if len(c) > 2:
            raise FormulaError(f"clause {c} has more than two literals")


@dataclass
class NaeTrace:
    source: list[int]


def reduce_nae_to_2sat(f: CnfFormula, k: int):
    """(l or l') becomes (l or l') and (-l or -l'); a unit (l) becomes (l) and (-l); an empty clause stays."""
    _check_width(f)
    clauses, source = [], []
    for i, c in enumerate(f.clauses):
        if not c:
            clauses.append(())
            source.append(i)
            continue
        clauses += [tuple(c), tuple(-lit for lit in c)]
        source += [i, i]
    return CnfFormula(f.n, clauses), k, NaeTrace(source)


@dataclass
class VardelTrace:
    n_source: int
    empty: list[int]
    copy_of: list[tuple[int, int]] = field(default_factory=list)
    clause_of: list[int | None] = field(default_factory=list)


def reduce_2sat_to_vardel(f: CnfFormula, k: int):
    """One fresh variable per (clause, variable) occurrence, tied together by equality clauses.

    Empty clauses are stripped first and each one uses up a unit of k.
    """
    _check_width(f)
    trace = VardelTrace(f.n, [i for i, c in enumerate(f.clauses) if not c])
    k -= len(trace.empty)
    copies: dict[int, list[int]] = {}
    clauses = []
    for i, c in enumerate(f.clauses):
        if not c:
            continue
        local = {}
        for lit in c:
            x = abs(lit)
            if x not in local:
                trace.copy_of.append((x, i))
                local[x] = len(trace.copy_of)
                copies.setdefault(x, []).append(local[x])
        clauses.append(tuple(local[abs(lit)] if lit > 0 else -local[abs(lit)] for lit in c))
        trace.clause_of.append(i)
    for x in sorted(copies):
        ids = copies[x]
        for a in range(len(ids)):
            for b in range(a + 1, len(ids)):
                clauses += [(-ids[a], ids[b]), (ids[a], -ids[b])]
                trace.clause_of += [None, None]
    return CnfFormula(len(trace.copy_of), clauses), k, trace


@dataclass
class GraphTrace:
    n_vars: int
    pendant_clause: dict[int, int]


def literal_vertex(lit: int) -> int:
    return 2 * (abs(lit) - 1) + (0 if lit > 0 else 1)


def reduce_vardel_to_vcam(f: CnfFormula, k: int):
    """Vertices x+ = 2(x-1), x- = 2(x-1)+1; a cover picks the true literals.

    Binary clauses join their literal vertices; a unit clause (or a repeated
    literal) hangs a fresh pendant vertex off its literal vertex; a clause with
    complementary literals is always satisfied and adds nothing.
    """
    _check_width(f)
    if any(not c for c in f.clauses):
        raise FormulaError("empty clauses must be stripped before this stage")
    n = 2 * f.n
    matching = [(2 * x, 2 * x + 1) for x in range(f.n)]
    edges = list(matching)
    pendants = {}
    for i, c in enumerate(f.clauses):
        lits = sorted(set(c))
        if len(lits) == 2 and lits[0] == -lits[1]:
            continue
        if len(lits) == 1:
            pendants[n] = i
            edges.append((literal_vertex(lits[0]), n))
            n += 1
        else:
            edges.append((literal_vertex(lits[0]), literal_vertex(lits[1])))
    return Graph(n, edges), matching, k, GraphTrace(f.n, pendants)


def reconstruct(vtrace: VardelTrace, gtrace: GraphTrace, cover) -> tuple[list[int], tuple[int, ...]]:
    """Deleted source clauses and a source assignment from a cover of the final graph."""
    chosen = set(cover)
    deleted = set(vtrace.empty)
    values: dict[int, set[int]] = {}
    for y in range(1, gtrace.n_vars + 1):
        x, clause = vtrace.copy_of[y - 1]
        pos, neg = literal_vertex(y) in chosen, literal_vertex(-y) in chosen
        if pos and neg:
            deleted.add(clause)
        else:
            values.setdefault(x, set()).add(1 if pos else 0)
    for p, i in gtrace.pendant_clause.items():
        if p in chosen:
            source = vtrace.clause_of[i]
            if source is None:
                raise AssertionError("pendant attached to an equality clause")
            deleted.add(source)
    beta = [0] * vtrace.n_source
    for x, vals in values.items():
        if len(vals) != 1:
            raise AssertionError(f"copies of x{x} disagree")
        beta[x - 1] = vals.pop()
    return sorted(deleted), tuple(beta)


@dataclass
class AlmostResult:
    answer: bool
    deleted: tuple[int, ...] | None
    assignment: tuple[int, ...] | None
    rounds: int = 0
    frontier_peak: int = 0


def _verify(f: CnfFormula, deleted, beta, mode: Mode):
    drop = set(deleted)
    for i, c in enumerate(f.clauses):
        if i not in drop and not eval_clause(beta, c, mode):
            raise AssertionError(f"clause {i} is not satisfied after reconstruction")


def _solve_chain(f: CnfFormula, k: int, workers: int):
    vf, vk, vtrace = reduce_2sat_to_vardel(f, k)
    if vk < 0:
        return None
    g, matching, gk, gtrace = reduce_vardel_to_vcam(vf, vk)
    res = solve_vc_above_matching(g, matching, gk, workers=workers)
    if not res.answer:
        return None, res
    deleted, beta = reconstruct(vtrace, gtrace, res.cover)
    return (deleted, beta), res


def solve_almost_2sat(f: CnfFormula, k: int, workers: int = 1) -> AlmostResult:
    """Can deleting at most k clauses make the 2-CNF f satisfiable?"""
    _check_width(f)
    out = _solve_chain(f, k, workers)
    if out is None:
        return AlmostResult(False, None, None)
    found, res = out
    if found is None:
        return AlmostResult(False, None, None, res.rounds, res.frontier_peak)
    deleted, beta = found
    if len(deleted) > k:
        raise AssertionError("reconstruction deleted too many clauses")
    _verify(f, deleted, beta, SAT)
    return AlmostResult(True, tuple(deleted), beta, res.rounds, res.frontier_peak)


def solve_almost_nae_2sat(f: CnfFormula, k: int, workers: int = 1) -> AlmostResult:
    """Can deleting at most k clauses make f nae-satisfiable?"""
    psi, k2, trace = reduce_nae_to_2sat(f, k)
    out = _solve_chain(psi, k2, workers)
    if out is None:
        return AlmostResult(False, None, None)
    found, res = out
    if found is None:
        return AlmostResult(False, None, None, res.rounds, res.frontier_peak)
    deleted = sorted({trace.source[j] for j in found[0]})
    beta = found[1]
    if len(deleted) > k:
        raise AssertionError("reconstruction deleted too many clauses")
    _verify(f, deleted, beta, NAE)
    return AlmostResult(True, tuple(deleted), beta, res.rounds, res.frontier_peak)
