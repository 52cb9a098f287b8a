"""Plain vertex cover with a degree kernel, and min-sat / almost-dnf on top of it."""

from __future__ import annotations

from dataclasses import dataclass

from .engine import Verdict, run_rounds
from .formula import CnfFormula, DnfFormula, count_satisfied
from .graph import Graph, induced


@dataclass
class Kernel:
    forced: tuple[int, ...]
    graph: Graph
    names: tuple[int, ...]
    budget: int


def buss_kernel(g: Graph, k: int) -> Kernel | None:
    """Force every vertex of degree > k; None means no cover of size k exists.

    The residual has maximum degree k, so a cover of size k' = k - |F| can hit at
    most k * k' edges; more than that is a rejection.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    forced = tuple(v for v in range(g.n) if g.degree(v) > k)
    if len(forced) > k:
        return None
    budget = k - len(forced)
    fset = set(forced)
    rest = [(u, v) for u, v in g.edges if u not in fset and v not in fset]
    if len(rest) > k * budget:
        return None
    touched = {u for e in rest for u in e}
    sub, names = induced(g, touched)
    return Kernel(forced, sub, names, budget)


def _branch(inst):
    edges, chosen, budget = inst
    if not edges:
        return Verdict(chosen)
    if budget == 0:
        return []
    u, v = edges[0]
    return [
        (tuple(e for e in edges if w not in e), tuple(sorted(chosen + (w,))), budget - 1)
        for w in (u, v)
    ]


def vertex_cover(g: Graph, k: int, workers: int = 1) -> tuple[int, ...] | None:
    """A cover of size at most k, or None. Branches on the least uncovered edge, left endpoint first."""
    kern = buss_kernel(g, k)
    if kern is None:
        return None
    res = run_rounds([(kern.graph.edges, (), kern.budget)], _branch, kern.budget + 1, growth=2, workers=workers)
    if not res.found:
        return None
    cover = tuple(sorted(set(kern.forced) | {kern.names[v] for v in res.verdict}))
    if len(cover) > k or not g.is_vertex_cover(cover):
        raise AssertionError("vertex cover search returned an invalid cover")
    return cover


def is_tautology(clause) -> bool:
    lits = set(clause)
    return any(-lit in lits for lit in lits)


def minsat_graph(f: CnfFormula) -> tuple[Graph, tuple[int, ...], int]:
    """Conflict graph on the non-tautological clauses.

    Returns the graph, the clause index of each vertex and the number of
    tautological clauses left out (those are satisfied no matter what).
    """
    names = tuple(i for i, c in enumerate(f.clauses) if not is_tautology(c))
    lits = [set(f.clauses[i]) for i in names]
    edges = [
        (a, b)
        for a in range(len(names))
        for b in range(a + 1, len(names))
        if any(-lit in lits[b] for lit in lits[a])
    ]
    return Graph(len(names), edges), names, len(f.clauses) - len(names)


def solve_min_sat(f: CnfFormula, k: int, workers: int = 1) -> tuple[bool, tuple[int, ...] | None]:
    """Is there an assignment satisfying at most k clauses?

    Clauses outside a small conflict-graph cover share no complementary pair,
    so all of them can be falsified at once.
    """
    g, names, taut = minsat_graph(f)
    budget = k - taut
    if budget < 0:
        return False, None
    cover = vertex_cover(g, budget, workers)
    if cover is None:
        return False, None
    beta = [0] * f.n
    inside = set(cover)
    for v, i in enumerate(names):
        if v not in inside:
            for lit in f.clauses[i]:
                beta[abs(lit) - 1] = 0 if lit > 0 else 1
    beta = tuple(beta)
    if count_satisfied(beta, f) > k:
        raise AssertionError("falsifying assignment satisfies too many clauses")
    return True, beta


def negate_terms(f: DnfFormula) -> CnfFormula:
    return CnfFormula(f.n, [tuple(-lit for lit in t) for t in f.terms])


def solve_almost_dnf(f: DnfFormula, k: int, workers: int = 1) -> tuple[bool, tuple[int, ...] | None]:
    """Is there an assignment satisfying all but at most k terms?"""
    ok, beta = solve_min_sat(negate_terms(f), k, workers)
    if ok and count_satisfied(beta, f) < len(f.terms) - k:
        raise AssertionError("assignment misses too many terms")
    return ok, beta
