"""Simple undirected graphs on vertices 0..n-1."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]
    adj: tuple[tuple[int, ...], ...] = field(compare=False, repr=False)

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        norm = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range")
            if u == v:
                raise GraphError(f"self-loop at {u}")
            norm.add((min(u, v), max(u, v)))
        ordered = tuple(sorted(norm))
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in ordered:
            adj[u].append(v)
            adj[v].append(u)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", ordered)
        object.__setattr__(self, "adj", tuple(tuple(sorted(a)) for a in adj))

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def is_vertex_cover(self, cover: Iterable[int]) -> bool:
        chosen = set(cover)
        return all(u in chosen or v in chosen for u, v in self.edges)

    def is_matching(self, edges: Iterable[Sequence[int]]) -> bool:
        seen = set()
        present = set(self.edges)
        for u, v in edges:
            if (min(u, v), max(u, v)) not in present or u in seen or v in seen:
                return False
            seen.update((u, v))
        return True


def induced(g: Graph, keep: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph on ``keep`` relabelled to 0..k-1, with the old label of every new vertex."""
    names = tuple(sorted(set(keep)))
    index = {v: i for i, v in enumerate(names)}
    edges = [(index[u], index[v]) for u, v in g.edges if u in index and v in index]
    return Graph(len(names), edges), names


def parse_dimacs_graph(data: str | bytes) -> Graph:
    """DIMACS edge format: "p edge n m" then "e u v" lines with 1-based vertices."""
    text = data.decode() if isinstance(data, (bytes, bytearray)) else data
    n = None
    edges = []
    for lineno, line in enumerate(text.splitlines(), 1):
        tokens = line.split()
        if not tokens or tokens[0] == "c":
            continue
        try:
            if tokens[0] == "p":
                if n is not None or len(tokens) != 4 or tokens[1] not in ("edge", "col"):
                    raise GraphError(f"line {lineno}: malformed header")
                n = int(tokens[2])
            elif tokens[0] == "e" and len(tokens) == 3:
                if n is None:
                    raise GraphError(f"line {lineno}: edge before header")
                edges.append((int(tokens[1]) - 1, int(tokens[2]) - 1))
            else:
                raise GraphError(f"line {lineno}: unrecognised line")
        except ValueError as exc:
            if isinstance(exc, GraphError):
                raise
            raise GraphError(f"line {lineno}: non-integer token") from None
    if n is None:
        raise GraphError("missing header")
    return Graph(n, edges)


def parse_edge_list(data: str | bytes) -> list[tuple[int, int]]:
    """Lines "u v" or "e u v" with 1-based vertices; used for matchings."""
    text = data.decode() if isinstance(data, (bytes, bytearray)) else data
    out = []
    for lineno, line in enumerate(text.splitlines(), 1):
        tokens = line.split()
        if not tokens or tokens[0] in ("c", "p"):
            continue
        if tokens[0] == "e":
            tokens = tokens[1:]
        if len(tokens) != 2:
            raise GraphError(f"line {lineno}: expected two vertices")
        try:
            out.append((int(tokens[0]) - 1, int(tokens[1]) - 1))
        except ValueError:
            raise GraphError(f"line {lineno}: non-integer token") from None
    return out


def to_dimacs_graph(g: Graph) -> str:
    lines = [f"p edge {g.n} {len(g.edges)}"]
    lines += [f"e {u + 1} {v + 1}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


FIGURE_LABELS = "abcde"


def figure_graph() -> Graph:
    """Five-vertex example graph a..e (0..4) with edges ab, ac, bc, cd, ce, de."""
    return Graph(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])
