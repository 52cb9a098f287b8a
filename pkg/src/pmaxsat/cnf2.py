"""Exact max-(nae-)sat for formulas in which every variable occurs at most twice.

Both problems reduce to counting special connected components of a tagged
multigraph whose vertices are clauses (plus, for nae, one dummy per variable
occurring with both signs).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .formula import CnfFormula, FormulaError


@dataclass
class TaggedGraph:
    n: int
    edges: list[tuple[int, int]]
    tags: frozenset
    labels: list

    def __post_init__(self):
        for u, v in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range")
        if any(not 0 <= t < self.n for t in self.tags):
            raise ValueError("tag out of range")

    def components(self) -> list[tuple[list[int], list[int]]]:
        """(vertices, edge indices) per connected component, ordered by smallest vertex."""
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in self.edges:
            parent[find(u)] = find(v)
        groups: dict[int, tuple[list, list]] = {}
        for v in range(self.n):
            groups.setdefault(find(v), ([], []))[0].append(v)
        for i, (u, _) in enumerate(self.edges):
            groups[find(u)][1].append(i)
        return sorted(groups.values(), key=lambda c: c[0][0])


def occurrences(f: CnfFormula) -> Counter:
    return Counter(abs(lit) for c in f.clauses for lit in c)


def check_cnf2(f: CnfFormula) -> bool:
    return all(c <= 2 for c in occurrences(f).values())


def _require(f: CnfFormula):
    if not check_cnf2(f):
        raise FormulaError("some variable occurs more than twice")


def build_sat2_graph(f: CnfFormula) -> tuple[TaggedGraph, int]:
    """Graph on the non-empty clauses plus the number of empty clauses dropped.

    One edge per (positive occurrence, negative occurrence) pair of a variable; a
    clause holding both signs of a variable gets a self-loop. Clauses containing a
    pure literal are tagged.
    """
    _require(f)
    keep = [i for i, c in enumerate(f.clauses) if c]
    pos: dict[int, list[int]] = {}
    neg: dict[int, list[int]] = {}
    for v, i in enumerate(keep):
        for lit in f.clauses[i]:
            (pos if lit > 0 else neg).setdefault(abs(lit), []).append(v)
    edges = []
    for x in sorted(set(pos) & set(neg)):
        edges += [(a, b) for a in pos[x] for b in neg[x]]
    tags = frozenset(v for v, i in enumerate(keep)
                     if any(abs(lit) not in pos or abs(lit) not in neg for lit in f.clauses[i]))
    return TaggedGraph(len(keep), edges, tags, keep), len(f.clauses) - len(keep)


def _is_tree(verts, edge_ids) -> bool:
    return len(edge_ids) == len(verts) - 1


def max_sat2_value(f: CnfFormula) -> tuple[int, int]:
    """(maximum number of satisfiable clauses, number of untagged tree components)."""
    g, dropped = build_sat2_graph(f)
    cores = sum(1 for verts, es in g.components()
                if _is_tree(verts, es) and not g.tags.intersection(verts))
    return g.n - cores, cores


def build_nae2_graph(f: CnfFormula) -> tuple[TaggedGraph, int]:
    """Graph on the clauses with at least two distinct literals, plus dummies.

    Returns the graph and the number of clauses dropped (those can never be
    nae-satisfied). Dummy labels are ("d", x).
    """
    _require(f)
    keep = [i for i, c in enumerate(f.clauses) if len(set(c)) >= 2]
    occ: dict[int, list[tuple[int, int]]] = {}
    for v, i in enumerate(keep):
        for lit in f.clauses[i]:
            occ.setdefault(abs(lit), []).append((v, lit))
    labels: list = list(keep)
    edges = []
    for x in sorted(occ):
        o = occ[x]
        signs = {lit > 0 for _, lit in o}
        if len(signs) == 2:
            d = len(labels)
            labels.append(("d", x))
            edges += [(v, d) for v, _ in o]
        elif len(o) == 2 and o[0][0] != o[1][0]:
            edges.append((o[0][0], o[1][0]))
    tags = frozenset(v for v, i in enumerate(keep)
                     if any(all(w == v for w, _ in occ[abs(lit)]) for lit in f.clauses[i]))
    return TaggedGraph(len(labels), edges, tags, labels), len(f.clauses) - len(keep)


def _is_odd_cycle(g: TaggedGraph, verts, edge_ids) -> bool:
    if len(edge_ids) != len(verts) or len(verts) % 2 == 0:
        return False
    deg = Counter()
    for i in edge_ids:
        u, v = g.edges[i]
        deg[u] += 1
        deg[v] += 1
    return all(deg[v] == 2 for v in verts)


def max_nae_sat2_value(f: CnfFormula) -> tuple[int, int]:
    """(maximum number of nae-satisfiable clauses, number of untagged odd-cycle components)."""
    g, dropped = build_nae2_graph(f)
    rest = len(f.clauses) - dropped
    cores = sum(1 for verts, es in g.components()
                if _is_odd_cycle(g, verts, es) and not g.tags.intersection(verts))
    return rest - cores, cores


def almost_sat2(f: CnfFormula, k: int) -> bool:
    return max_sat2_value(f)[0] >= f.m - k


def almost_nae_sat2(f: CnfFormula, k: int) -> bool:
    return max_nae_sat2_value(f)[0] >= f.m - k
