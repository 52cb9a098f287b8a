"""Vertex cover above a (fractional) matching via Hochbaum networks and branching.

Half-integral values are stored in half-units: 0, 1, 2 stand for 0, 1/2, 1.
A matching solution is a tuple aligned with ``graph.edges``; a vertex-cover LP
solution is a tuple indexed by vertex.
"""

from __future__ import annotations

from dataclasses import dataclass

from .engine import Verdict, run_rounds
from .flow import Network, _residual, flow_update, flow_value, max_flow, reachable, shortest_path
from .graph import Graph, induced


class ExcessError(Exception):
    """No optimal fractional matching lies within the allowed budget."""


def hochbaum(g: Graph) -> Network:
    """Vertices v1 = v, v2 = n + v, s = 2n, t = 2n + 1.

    Arc order: s -> v1 for every v, then u1 -> v2 and v1 -> u2 for every edge
    (u, v) in edge order, then v2 -> t for every v.
    """
    n = g.n
    s, t = 2 * n, 2 * n + 1
    arcs = [(s, v) for v in range(n)]
    for u, v in g.edges:
        arcs += [(u, n + v), (v, n + u)]
    arcs += [(n + v, t) for v in range(n)]
    return Network(2 * n + 2, arcs, s, t)


def _crossing_offset(g: Graph) -> int:
    return g.n


def _sink_offset(g: Graph) -> int:
    return g.n + 2 * len(g.edges)


def _assemble(g: Graph, crossing: list[int]) -> tuple[int, ...]:
    """Full flow from the crossing-arc values; source and sink arcs follow by conservation."""
    n = g.n
    out = [0] * n
    inc = [0] * n
    for e, (u, v) in enumerate(g.edges):
        a, b = crossing[2 * e], crossing[2 * e + 1]
        out[u] += a
        inc[v] += a
        out[v] += b
        inc[u] += b
    if any(x > 1 for x in out + inc):
        raise ValueError("crossing values exceed unit vertex capacity")
    return tuple(out + crossing + inc)


def validate_beta(g: Graph, beta) -> None:
    if len(beta) != len(g.edges) or any(b not in (0, 1, 2) for b in beta):
        raise ValueError("beta must give 0, 1 or 2 half-units per edge")
    load = [0] * g.n
    for (u, v), b in zip(g.edges, beta):
        load[u] += b
        load[v] += b
    if any(x > 2 for x in load):
        raise ValueError("beta exceeds 1 at some vertex")


def validate_alpha(g: Graph, alpha) -> None:
    if len(alpha) != g.n or any(a not in (0, 1, 2) for a in alpha):
        raise ValueError("alpha must give 0, 1 or 2 half-units per vertex")
    for u, v in g.edges:
        if alpha[u] + alpha[v] < 2:
            raise ValueError(f"edge ({u}, {v}) is not covered by alpha")


def beta_to_flow(g: Graph, beta) -> tuple[int, ...]:
    """Unit flow of value sum(beta) (half-units) on hochbaum(g).

    Edges with beta 1 use both crossing arcs. Half edges form vertex-disjoint
    paths and cycles; orienting each consistently lets every half edge use one
    crossing arc in its direction of travel.
    """
    validate_beta(g, beta)
    crossing = [0] * (2 * len(g.edges))
    half_adj: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
    for e, ((u, v), b) in enumerate(zip(g.edges, beta)):
        if b == 2:
            crossing[2 * e] = crossing[2 * e + 1] = 1
        elif b == 1:
            half_adj[u].append((v, e))
            half_adj[v].append((u, e))
    used = set()

    def walk(start):
        cur = start
        while True:
            nxt = [(w, e) for w, e in sorted(half_adj[cur]) if e not in used]
            if not nxt:
                return
            w, e = nxt[0]
            used.add(e)
            # u1 -> v2 sits at 2e when cur is the lower endpoint
            crossing[2 * e + (0 if cur < w else 1)] = 1
            cur = w

    for v in range(g.n):
        if len(half_adj[v]) == 1:
            walk(v)
    for v in range(g.n):
        walk(v)
    return _assemble(g, crossing)


def flow_to_beta(g: Graph, f) -> tuple[int, ...]:
    base = _crossing_offset(g)
    return tuple(f[base + 2 * e] + f[base + 2 * e + 1] for e in range(len(g.edges)))


@dataclass(frozen=True)
class GhfTriple:
    """A graph, its Hochbaum network and a flow; ``maximal`` marks a maximum flow."""

    graph: Graph
    network: Network
    flow: tuple[int, ...]
    maximal: bool = False


def maximal_triple(g: Graph, f=None) -> GhfTriple:
    net = hochbaum(g)
    return GhfTriple(g, net, max_flow(net, f), True)


def optimal_beta(g: Graph, beta, half_budget: int):
    """Optimal fractional matching reachable within ``half_budget`` extra half-units.

    Augments the flow of beta at most half_budget + 1 times. Returns
    (beta', flow); raises ExcessError when every one of those steps succeeds.
    """
    net = hochbaum(g)
    f = beta_to_flow(g, beta)
    start = flow_value(net, f)
    f = flow_update(net, f, half_budget + 1)
    if flow_value(net, f) == start + half_budget + 1:
        raise ExcessError(f"optimum exceeds |beta| + {half_budget} half-units")
    return flow_to_beta(g, f), f


def _is_maximal(triple: GhfTriple) -> bool:
    net = triple.network
    return shortest_path(_residual(net, triple.flow), net.s, net.t) is None


def flow_to_alpha(triple: GhfTriple) -> tuple[int, ...]:
    """Vertex-cover LP solution read off residual reachability from s (half-units)."""
    net = triple.network
    reach = reachable(_residual(net, triple.flow), net.s)
    if net.t in reach:
        raise ValueError("flow is not maximum")
    n = triple.graph.n
    alpha = []
    for v in range(n):
        one, two = v in reach, n + v in reach
        alpha.append(0 if one and not two else 2 if two and not one else 1)
    return tuple(alpha)


def nt_reduce(g: Graph, alpha):
    """Drop integral vertices: returns (reduced graph, its original labels, ones, zeros)."""
    ones = tuple(v for v in range(g.n) if alpha[v] == 2)
    zeros = tuple(v for v in range(g.n) if alpha[v] == 0)
    sub, names = induced(g, [v for v in range(g.n) if alpha[v] == 1])
    return sub, names, ones, zeros


def restrict_flow(g: Graph, f, keep) -> tuple[Graph, tuple[int, ...], tuple[int, ...]]:
    """Induced subgraph on ``keep`` with the flow paths that avoid removed vertices.

    Every flow path in a Hochbaum network is s -> u1 -> v2 -> t, so keeping
    exactly the paths between kept vertices conserves flow.
    """
    sub, names = induced(g, keep)
    index = {v: i for i, v in enumerate(names)}
    old = {e: i for i, e in enumerate(g.edges)}
    base = _crossing_offset(g)
    crossing = []
    for u, v in sub.edges:
        e = old[(names[u], names[v])]
        crossing += [f[base + 2 * e], f[base + 2 * e + 1]]
    return sub, names, _assemble(sub, crossing)


def _closure_graph(triple: GhfTriple) -> list[list[int]]:
    """Residual-style digraph on V1 and V2 used to find removable sets.

    Crossing arcs count as uncapacitated: u1 -> v2 is always present, and
    v2 -> u1 is added when the arc carries flow. Source and sink are left out.
    """
    g, f = triple.graph, triple.flow
    n = g.n
    base = _crossing_offset(g)
    adj: list[list[int]] = [[] for _ in range(2 * n)]
    for e, (u, v) in enumerate(g.edges):
        adj[u].append(n + v)
        adj[v].append(n + u)
        if f[base + 2 * e]:
            adj[n + v].append(u)
        if f[base + 2 * e + 1]:
            adj[n + u].append(v)
    for a in adj:
        a.sort()
    return adj


def strongly_connected(adj: list[list[int]]) -> list[list[int]]:
    """Tarjan's algorithm; components come out sinks first (reverse topological order)."""
    n = len(adj)
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    comps: list[list[int]] = []
    counter = 0
    for root in range(n):
        if index[root] >= 0:
            continue
        work = [(root, 0)]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, i = work[-1]
            if i < len(adj[v]):
                work[-1] = (v, i + 1)
                w = adj[v][i]
                if index[w] < 0:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, 0))
                elif on_stack[w]:
                    low[v] = min(low[v], index[w])
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                comps.append(sorted(comp))
    return comps


def loose_sink_components(triple: GhfTriple) -> list[list[int]]:
    """Loose strongly connected components with no arcs leaving them, smallest vertex first.

    A component is loose when no vertex has both of its copies in it. Vertices
    are Hochbaum indices (v1 = v, v2 = n + v).
    """
    n = triple.graph.n
    adj = _closure_graph(triple)
    comps = strongly_connected(adj)
    comp_of = [0] * (2 * n)
    for c, comp in enumerate(comps):
        for x in comp:
            comp_of[x] = c
    out = []
    for c, comp in enumerate(comps):
        members = set(comp)
        if any(x < n and x + n in members for x in comp):
            continue
        if all(comp_of[y] == c for x in comp for y in adj[x]):
            out.append(comp)
    return sorted(out)


def removable_closure(triple: GhfTriple) -> set[int]:
    """Everything removable from a triple whose all-1/2 solution is optimal.

    Takes the first loose sink component, removes it, restores a maximum flow
    and repeats until no loose sink component is left. The union Q of the taken
    components (in the input's Hochbaum numbering) is itself loose, and removing
    it in one go with remove_set gives the same graph and cover commitments.
    """
    n = triple.graph.n
    current = GhfTriple(triple.graph, triple.network, max_flow(triple.network, triple.flow), True)
    names = tuple(range(n))
    taken: set[int] = set()
    while True:
        comps = loose_sink_components(current)
        if not comps:
            return taken
        local_n = current.graph.n
        comp = comps[0]
        taken |= {names[x] if x < local_n else n + names[x - local_n] for x in comp}
        current, local, _, _ = remove_set(current, comp)
        names = tuple(names[v] for v in local)
        current = GhfTriple(current.graph, current.network, max_flow(current.network, current.flow), True)


def remove_set(triple: GhfTriple, S):
    """Remove A = {v : v1 in S} together with N(A); N(A) goes into the cover.

    Both copies of every removed vertex leave the network and the flow keeps the
    paths between surviving vertices (it may need re-maximising). Returns (new
    triple, labels of the kept vertices, vertices committed to the cover,
    vertices left out of it).
    """
    g = triple.graph
    A = {x for x in S if x < g.n}
    B = {w for v in A for w in g.adj[v]}
    if A & B:
        raise ValueError("set is not removable: it contains both ends of an edge")
    gone = A | B
    sub, names, f = restrict_flow(g, triple.flow, [v for v in range(g.n) if v not in gone])
    return GhfTriple(sub, hochbaum(sub), f, False), names, tuple(sorted(B)), tuple(sorted(A))


@dataclass(frozen=True)
class BranchInstance:
    graph: Graph
    names: tuple[int, ...]
    flow: tuple[int, ...]
    allowance: int
    cover: tuple[int, ...]


def _lift(names, local) -> tuple[int, ...]:
    return tuple(names[v] for v in local)


def _reduce(inst: BranchInstance):
    """Steps 0-2 for one instance; returns the reduced instance or None when pruned."""
    g, names = inst.graph, inst.names
    net = hochbaum(g)
    start = flow_value(net, inst.flow)
    room = inst.allowance - start
    if room < 0:
        return None
    f = flow_update(net, inst.flow, room + 1)
    if flow_value(net, f) > inst.allowance:
        return None
    triple = GhfTriple(g, net, f, True)
    alpha = flow_to_alpha(triple)
    ones = [v for v in range(g.n) if alpha[v] == 2]
    sub, local, f = restrict_flow(g, f, [v for v in range(g.n) if alpha[v] == 1])
    cover = set(inst.cover) | set(_lift(names, ones))
    names = _lift(names, local)
    allowance = inst.allowance - 2 * len(ones)
    triple = GhfTriple(sub, hochbaum(sub), f, True)
    closure = removable_closure(triple)
    if closure:
        triple, local, committed, _ = remove_set(triple, closure)
        cover |= set(_lift(names, committed))
        allowance -= 2 * len(committed)
        names = _lift(names, local)
    flow = max_flow(triple.network, triple.flow)
    return BranchInstance(triple.graph, names, flow, allowance, tuple(sorted(cover)))


def _child(inst: BranchInstance, w: int):
    g = inst.graph
    sub, local, f = restrict_flow(g, inst.flow, [v for v in range(g.n) if v != w])
    net = hochbaum(sub)
    f = flow_update(net, f, 2)
    allowance = inst.allowance - 2
    if allowance < flow_value(net, f):
        return None
    return BranchInstance(sub, _lift(inst.names, local), f, allowance, tuple(sorted(inst.cover + (inst.names[w],))))


def _step(inst: BranchInstance):
    red = _reduce(inst)
    if red is None:
        return []
    if not red.graph.edges:
        return Verdict(red.cover)
    u, v = red.graph.edges[0]
    return [c for c in (_child(red, u), _child(red, v)) if c is not None]


@dataclass
class CoverResult:
    answer: bool
    cover: tuple[int, ...] | None
    rounds: int
    frontier_peak: int
    max_growth: int


def solve_vc_above_relaxed(g: Graph, beta, g_param: int, workers: int = 1, half_units: bool = False) -> CoverResult:
    """Decide whether g has a vertex cover of size at most |beta| + g_param.

    ``beta`` is in half-units; ``g_param`` is in whole units unless
    ``half_units`` is set.
    """
    validate_beta(g, beta)
    budget = g_param if half_units else 2 * g_param
    if budget < 0:
        return CoverResult(False, None, 0, 0, 0)
    allowance = sum(beta) + budget
    root = BranchInstance(g, tuple(range(g.n)), beta_to_flow(g, beta), allowance, ())
    result = run_rounds([root], _step, max_rounds=budget + 2, growth=2, workers=workers)
    cover = result.verdict
    if cover is not None:
        if not g.is_vertex_cover(cover) or 2 * len(cover) > allowance:
            raise AssertionError("solver produced an invalid cover")
    return CoverResult(cover is not None, cover, result.rounds, result.frontier_peak, result.max_growth)


def solve_vc_above_matching(g: Graph, matching, g_param: int, workers: int = 1) -> CoverResult:
    """Decide whether g has a vertex cover of size at most |matching| + g_param."""
    norm = [(min(u, v), max(u, v)) for u, v in matching]
    if not g.is_matching(norm):
        raise ValueError("not a matching of the graph")
    chosen = set(norm)
    beta = tuple(2 if e in chosen else 0 for e in g.edges)
    return solve_vc_above_relaxed(g, beta, g_param, workers=workers)
