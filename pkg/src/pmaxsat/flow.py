"""Unit-capacity networks, 0-1 flows and shortest augmenting paths."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

UnitFlow = tuple[int, ...]


class FlowError(ValueError):
    pass


@dataclass(frozen=True)
class Network:
    """Directed graph on 0..n-1 with at most one arc between any two vertices."""

    n: int
    arcs: tuple[tuple[int, int], ...]
    s: int
    t: int
    index: dict = field(compare=False, repr=False)

    def __init__(self, n: int, arcs: Sequence[Sequence[int]], s: int, t: int):
        arcs = tuple((int(u), int(v)) for u, v in arcs)
        index = {}
        for i, (u, v) in enumerate(arcs):
            if not (0 <= u < n and 0 <= v < n) or u == v:
                raise FlowError(f"bad arc ({u}, {v})")
            if (u, v) in index or (v, u) in index:
                raise FlowError(f"arc ({u}, {v}) is parallel or antiparallel to another arc")
            index[(u, v)] = i
        if not (0 <= s < n and 0 <= t < n):
            raise FlowError("source or sink out of range")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "arcs", arcs)
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "t", t)
        object.__setattr__(self, "index", index)

    def empty_flow(self) -> UnitFlow:
        return (0,) * len(self.arcs)


def flow_value(net: Network, f: Sequence[int]) -> int:
    out = sum(x for (u, _), x in zip(net.arcs, f) if u == net.s)
    back = sum(x for (_, v), x in zip(net.arcs, f) if v == net.s)
    return out - back


def validate_flow(net: Network, f: Sequence[int]) -> None:
    if len(f) != len(net.arcs) or any(x not in (0, 1) for x in f):
        raise FlowError("flow must assign 0 or 1 to every arc")
    balance = [0] * net.n
    for (u, v), x in zip(net.arcs, f):
        balance[u] -= x
        balance[v] += x
    for v in range(net.n):
        if v not in (net.s, net.t) and balance[v]:
            raise FlowError(f"conservation fails at vertex {v}")


def build_residual(net: Network, f: Sequence[int]) -> list[list[int]]:
    """Adjacency lists (sorted) of the residual graph: unflowed arcs plus reversed flowed arcs."""
    validate_flow(net, f)
    return _residual(net, f)


def _residual(net: Network, f: Sequence[int]) -> list[list[int]]:
    adj: list[list[int]] = [[] for _ in range(net.n)]
    for (u, v), x in zip(net.arcs, f):
        if x:
            adj[v].append(u)
        else:
            adj[u].append(v)
    for a in adj:
        a.sort()
    return adj


def shortest_path(adj: Sequence[Sequence[int]], s: int, t: int) -> list[int] | None:
    """Shortest s-t path; at every step the smallest vertex one layer closer to t is taken."""
    n = len(adj)
    radj: list[list[int]] = [[] for _ in range(n)]
    for u in range(n):
        for v in adj[u]:
            radj[v].append(u)
    dist = [-1] * n
    dist[t] = 0
    queue = deque([t])
    while queue:
        v = queue.popleft()
        if v == s:
            break
        for u in radj[v]:
            if dist[u] < 0:
                dist[u] = dist[v] + 1
                queue.append(u)
    if dist[s] < 0:
        return None
    path = [s]
    while path[-1] != t:
        u = path[-1]
        path.append(min(v for v in adj[u] if dist[v] == dist[u] - 1))
    return path


def _augment_along(net: Network, f: list[int], path: Sequence[int]) -> None:
    for u, v in zip(path, path[1:]):
        i = net.index.get((u, v))
        if i is not None and f[i] == 0:
            f[i] = 1
        else:
            j = net.index[(v, u)]
            assert f[j] == 1
            f[j] = 0


def augment(net: Network, f: Sequence[int]) -> UnitFlow:
    """One augmenting step; returns f unchanged when no residual s-t path exists."""
    validate_flow(net, f)
    path = shortest_path(_residual(net, f), net.s, net.t)
    if path is None:
        return tuple(f)
    g = list(f)
    _augment_along(net, g, path)
    return tuple(g)


def flow_update(net: Network, f: Sequence[int], k: int) -> UnitFlow:
    """Up to k augmenting steps starting from f."""
    if k < 0:
        raise ValueError("k must be non-negative")
    validate_flow(net, f)
    g = list(f)
    for _ in range(k):
        path = shortest_path(_residual(net, g), net.s, net.t)
        if path is None:
            break
        _augment_along(net, g, path)
    return tuple(g)


def flow_of_value_k(net: Network, k: int) -> UnitFlow:
    return flow_update(net, net.empty_flow(), k)


def max_flow(net: Network, f: Sequence[int] | None = None) -> UnitFlow:
    return flow_update(net, net.empty_flow() if f is None else f, len(net.arcs) + 1)


def reachable(adj: Sequence[Sequence[int]], source: int) -> set[int]:
    seen = {source}
    stack = [source]
    while stack:
        u = stack.pop()
        for v in adj[u]:
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return seen


def normalize_capacities(n: int, arcs: Sequence[Sequence[int]], s: int, t: int) -> tuple[Network, list[list[int]]]:
    """Unit network for arcs (u, v, capacity): each unit of capacity becomes a path u -> mid -> v.

    Returns the network and, per input arc, the indices of its first-half arcs
    (the flow over the input arc is the sum of flow on those).
    """
    out_arcs = []
    pieces = []
    nxt = n
    for u, v, cap in arcs:
        if cap < 1:
            raise FlowError("capacities must be positive")
        mine = []
        for _ in range(cap):
            mine.append(len(out_arcs))
            out_arcs += [(u, nxt), (nxt, v)]
            nxt += 1
        pieces.append(mine)
    return Network(nxt, out_arcs, s, t), pieces


def network_from_arcs(n: int, arcs: Sequence[Sequence[int]], s: int, t: int) -> Network:
    """Build a network, subdividing arcs that repeat or oppose an earlier arc."""
    seen = set()
    out = []
    nxt = n
    for u, v in arcs:
        if u == v:
            raise FlowError(f"self-loop at {u}")
        if (u, v) in seen or (v, u) in seen:
            out += [(u, nxt), (nxt, v)]
            nxt += 1
        else:
            seen.add((u, v))
            out.append((u, v))
    return Network(nxt, out, s, t)


def parse_dimacs_max(data: str | bytes) -> tuple[int, list[tuple[int, int, int]], int, int]:
    """DIMACS max-flow text: "p max n m", source/sink via "n s t" or "n id s"/"n id t", arcs "a u v [cap]".

    Vertices are 1-based in the file and 0-based in the result.
    """
    text = data.decode() if isinstance(data, (bytes, bytearray)) else data
    n = s = t = None
    arcs = []
    for lineno, line in enumerate(text.splitlines(), 1):
        tok = line.split()
        if not tok or tok[0] == "c":
            continue
        try:
            if tok[0] == "p" and len(tok) == 4 and tok[1] == "max":
                n = int(tok[2])
            elif tok[0] == "n" and len(tok) == 3:
                if tok[2] == "s":
                    s = int(tok[1]) - 1
                elif tok[2] == "t":
                    t = int(tok[1]) - 1
                else:
                    s, t = int(tok[1]) - 1, int(tok[2]) - 1
            elif tok[0] == "a" and len(tok) in (3, 4):
                cap = int(tok[3]) if len(tok) == 4 else 1
                arcs.append((int(tok[1]) - 1, int(tok[2]) - 1, cap))
            else:
                raise FlowError(f"line {lineno}: unrecognised line")
        except ValueError as exc:
            if isinstance(exc, FlowError):
                raise
            raise FlowError(f"line {lineno}: non-integer token") from None
    if n is None or s is None or t is None:
        raise FlowError("missing header or source/sink line")
    for u, v, _ in arcs:
        if not (0 <= u < n and 0 <= v < n):
            raise FlowError(f"arc ({u + 1}, {v + 1}) out of range")
    return n, arcs, s, t
