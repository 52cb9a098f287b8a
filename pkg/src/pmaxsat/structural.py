"""Weighted partial MaxSAT parameterised by the structure of the incidence graph.

Four routes, all exact and constructive:

* vertex cover of the incidence graph: enumerate the cover side, complete the rest;
* treedepth: DPLL that branches on the variable nearest the root of a DFS forest;
* feedback vertex set: forest plus the set in every bag, then the bag DP;
* treewidth: exact elimination ordering, then the bag DP.

Incidence graph vertices: 0..n-1 are variables x1..xn, n..n+m-1 are clauses.
Assignments are carried as ints with x1 as the most significant of n bits, so
the numerically smallest int is the lexicographically least assignment.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations

from .cover import buss_kernel, vertex_cover
from .engine import Verdict, run_rounds
from .formula import HARD, WeightedCnf, checked_sum, count_weighted
from .graph import Graph


class DecompositionError(AssertionError):
    pass


INFEASIBLE = None


def incidence_graph(f: WeightedCnf) -> Graph:
    n = f.n
    return Graph(n + f.m, [(abs(lit) - 1, n + i) for i, c in enumerate(f.clauses) for lit in c])


def _bit(n: int, x: int) -> int:
    return 1 << (n - x)


def _to_tuple(n: int, beta: int) -> tuple[int, ...]:
    return tuple((beta >> (n - x)) & 1 for x in range(1, n + 1))


def _check_witness(f: WeightedCnf, weight, beta):
    ok, got = count_weighted(beta, f)
    if not ok or got != weight:
        raise AssertionError(f"witness gives ({ok}, {got}), expected weight {weight}")


# treedepth --------------------------------------------------------------

@dataclass
class TreedepthForest:
    parent: list[int]
    depth: int

    def levels(self) -> list[int]:
        lv = [0] * len(self.parent)
        for v in range(len(self.parent)):
            d, u = 1, v
            while self.parent[u] >= 0:
                u = self.parent[u]
                d += 1
            lv[v] = d
        return lv


def validate_forest(g: Graph, forest: TreedepthForest):
    lv = forest.levels()
    for u, v in g.edges:
        lo, hi = (u, v) if lv[u] > lv[v] else (v, u)
        a = lo
        while a >= 0 and a != hi:
            a = forest.parent[a]
        if a != hi:
            raise DecompositionError(f"edge ({u}, {v}) is not an ancestor pair")
    if forest.depth != (max(lv) if lv else 0):
        raise DecompositionError("stored depth is wrong")


def treedepth_forest(g: Graph, k: int) -> TreedepthForest | None:
    """Depth-first search forest (smallest neighbour first); None if deeper than 2**k."""
    parent = [-1] * g.n
    seen = [False] * g.n
    depth = 0
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        stack = [(root, iter(g.adj[root]), 1)]
        depth = max(depth, 1)
        while stack:
            v, it, d = stack[-1]
            for w in it:
                if not seen[w]:
                    seen[w] = True
                    parent[w] = v
                    stack.append((w, iter(g.adj[w]), d + 1))
                    depth = max(depth, d + 1)
                    break
            else:
                stack.pop()
    forest = TreedepthForest(parent, depth)
    validate_forest(g, forest)
    if depth > 2**k:
        return None
    return forest


def dpll_td(f: WeightedCnf, forest: TreedepthForest):
    """(best soft weight, assignment) or None when the hard clauses cannot all hold."""
    lv = forest.levels()
    n = f.n
    items = [(c, w) for c, w in zip(f.clauses, f.weights)]

    def solve(items):
        clauses = []
        for c, w in items:
            if not c:
                if w is HARD:
                    return None
                continue
            clauses.append((c, w))
        if not clauses:
            return 0, 0
        parent = {}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for c, _ in clauses:
            for lit in c:
                parent.setdefault(abs(lit), abs(lit))
            for lit in c[1:]:
                parent[find(abs(lit))] = find(abs(c[0]))
        groups: dict[int, list] = {}
        for c, w in clauses:
            groups.setdefault(find(abs(c[0])), []).append((c, w))
        if len(groups) > 1:
            total, beta = 0, 0
            for key in sorted(groups):
                sub = solve(groups[key])
                if sub is None:
                    return None
                total += sub[0]
                beta |= sub[1]
            return total, beta
        x = min(parent, key=lambda v: (lv[v - 1], v))
        best = None
        for value in (0, 1):
            true_lit = x if value else -x
            gained = 0
            rest = []
            for c, w in clauses:
                if true_lit in c:
                    if w is not HARD:
                        gained += w
                else:
                    rest.append((tuple(lit for lit in c if abs(lit) != x), w))
            sub = solve(rest)
            if sub is None:
                continue
            cand = (sub[0] + gained, sub[1] | (_bit(n, x) if value else 0))
            if best is None or cand[0] > best[0] or (cand[0] == best[0] and cand[1] < best[1]):
                best = cand
        return best

    out = solve(items)
    if out is None:
        return None
    weight, beta = out
    beta = _to_tuple(n, beta)
    _check_witness(f, weight, beta)
    return weight, beta


# feedback vertex sets ----------------------------------------------------

def _fvs_step(inst):
    edges, chosen, budget = inst
    edges = list(edges)
    while True:
        if budget < 0:
            return []
        deg = Counter()
        loops = set()
        for u, v in edges:
            deg[u] += 1
            deg[v] += 1
            if u == v:
                loops.add(u)
        if not edges:
            return Verdict(tuple(sorted(chosen)))
        low = [v for v in deg if deg[v] <= 1]
        if low:
            drop = set(low)
            edges = [e for e in edges if e[0] not in drop and e[1] not in drop]
            continue
        if loops:
            v = min(loops)
            edges = [e for e in edges if v not in e]
            chosen = chosen + (v,)
            budget -= 1
            continue
        two = [v for v in deg if deg[v] == 2]
        if two:
            v = max(two)
            ends = [e for e in edges if v in e]
            a = ends[0][0] if ends[0][1] == v else ends[0][1]
            b = ends[1][0] if ends[1][1] == v else ends[1][1]
            edges = [e for e in edges if v not in e] + [(min(a, b), max(a, b))]
            continue
        break
    if budget == 0:
        return []
    order = sorted(deg, key=lambda v: (-deg[v], v))[: 3 * budget]
    return [
        (tuple(e for e in edges if v not in e), chosen + (v,), budget - 1)
        for v in order
    ]


def is_forest_after(g: Graph, removed) -> bool:
    gone = set(removed)
    parent = list(range(g.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in g.edges:
        if u in gone or v in gone:
            continue
        a, b = find(u), find(v)
        if a == b:
            return False
        parent[a] = b
    return True


def fvs(g: Graph, k: int, workers: int = 1) -> tuple[int, ...] | None:
    """A feedback vertex set of size at most k, or None if there is none."""
    if k < 0:
        return None
    res = run_rounds([(g.edges, (), k)], _fvs_step, k + 2, growth=max(3 * k, 1), workers=workers)
    if not res.found:
        return None
    X = res.verdict
    if len(X) > k or not is_forest_after(g, X):
        raise AssertionError("feedback vertex search returned an invalid set")
    return X


# tree decompositions -----------------------------------------------------

@dataclass
class TreeDecomposition:
    bags: list[frozenset]
    edges: list[tuple[int, int]]

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0) - 1


def validate_td(g: Graph, td: TreeDecomposition):
    nb = len(td.bags)
    if nb == 0 or len(td.edges) != nb - 1:
        raise DecompositionError("decomposition is not a tree")
    adj = [[] for _ in range(nb)]
    for a, b in td.edges:
        adj[a].append(b)
        adj[b].append(a)
    seen = {0}
    stack = [0]
    while stack:
        a = stack.pop()
        for b in adj[a]:
            if b not in seen:
                seen.add(b)
                stack.append(b)
    if len(seen) != nb:
        raise DecompositionError("decomposition is not connected")
    for u, v in g.edges:
        if not any(u in b and v in b for b in td.bags):
            raise DecompositionError(f"edge ({u}, {v}) is in no bag")
    for v in range(g.n):
        holders = {i for i, b in enumerate(td.bags) if v in b}
        if not holders:
            raise DecompositionError(f"vertex {v} is in no bag")
        start = min(holders)
        reach = {start}
        stack = [start]
        while stack:
            a = stack.pop()
            for b in adj[a]:
                if b in holders and b not in reach:
                    reach.add(b)
                    stack.append(b)
        if reach != holders:
            raise DecompositionError(f"bags holding {v} are not connected")


def td_from_fvs(g: Graph, X) -> TreeDecomposition:
    """Bags {v, parent(v)} over the forest g - X, with X added to every bag."""
    xs = frozenset(X)
    rest = [v for v in range(g.n) if v not in xs]
    if not is_forest_after(g, xs):
        raise DecompositionError("removing X does not leave a forest")
    parent = {}
    order = []
    for root in rest:
        if root in parent:
            continue
        parent[root] = -1
        stack = [root]
        while stack:
            v = stack.pop()
            order.append(v)
            for w in g.adj[v]:
                if w not in xs and w not in parent:
                    parent[w] = v
                    stack.append(w)
    index = {v: i for i, v in enumerate(order)}
    bags = [frozenset({v} if parent[v] < 0 else {v, parent[v]}) | xs for v in order]
    edges = []
    prev_root = None
    for v in order:
        if parent[v] >= 0:
            edges.append((index[parent[v]], index[v]))
        else:
            if prev_root is not None:
                edges.append((index[prev_root], index[v]))
            prev_root = v
    if not bags:
        bags = [xs]
    td = TreeDecomposition(bags, edges)
    validate_td(g, td)
    return td


def _elimination_td(g: Graph, order) -> TreeDecomposition:
    adj = [set(a) for a in g.adj]
    pos = {v: i for i, v in enumerate(order)}
    bags, later = [], []
    for v in order:
        nb = {w for w in adj[v] if pos[w] > pos[v]}
        bags.append(frozenset(nb | {v}))
        later.append(nb)
        for a in nb:
            adj[a] |= nb - {a}
    edges = []
    roots = []
    for i, v in enumerate(order):
        if later[i]:
            edges.append((pos[min(later[i], key=pos.get)], i))
        else:
            roots.append(i)
    for a, b in zip(roots, roots[1:]):
        edges.append((a, b))
    if not bags:
        return TreeDecomposition([frozenset()], [])
    return TreeDecomposition(bags, edges)


def min_fill_order(g: Graph) -> tuple[list[int], int]:
    adj = [set(a) for a in g.adj]
    alive = set(range(g.n))
    order, width = [], -1 if g.n == 0 else 0

    def fill(v):
        nb = list(adj[v])
        return sum(1 for a, b in combinations(nb, 2) if b not in adj[a])

    while alive:
        v = min(alive, key=lambda u: (fill(u), len(adj[u]), u))
        nb = adj[v]
        width = max(width, len(nb))
        for a in nb:
            adj[a] |= nb - {a}
            adj[a].discard(v)
        alive.discard(v)
        order.append(v)
    return order, width


def _neighbours_after(g: Graph, eliminated: frozenset, v: int) -> set[int]:
    """Vertices outside the eliminated set reachable from v through eliminated vertices."""
    out = set()
    seen = {v}
    stack = [v]
    while stack:
        u = stack.pop()
        for w in g.adj[u]:
            if w in seen:
                continue
            seen.add(w)
            if w in eliminated:
                stack.append(w)
            else:
                out.add(w)
    return out


def treewidth_decomposition(g: Graph, k: int) -> TreeDecomposition | None:
    """A decomposition of width at most k, or None when the treewidth exceeds k."""
    order, width = min_fill_order(g)
    if width > k:
        order = _search_order(g, k)
        if order is None:
            return None
    td = _elimination_td(g, order)
    validate_td(g, td)
    if td.width > k:
        raise AssertionError("elimination order exceeds the width bound")
    return td


def _search_order(g: Graph, k: int):
    failed = set()
    everything = frozenset(range(g.n))

    def go(done: frozenset, order: list[int]):
        if done == everything:
            return list(order)
        if done in failed:
            return None
        for v in sorted(everything - done):
            if len(_neighbours_after(g, done, v)) <= k:
                order.append(v)
                got = go(done | {v}, order)
                if got is not None:
                    return got
                order.pop()
        failed.add(done)
        return None

    return go(frozenset(), [])


def treewidth(g: Graph) -> int:
    """Exact treewidth by trying increasing bounds."""
    k = -1 if g.n == 0 else 0
    while treewidth_decomposition(g, k) is None:
        k += 1
    return k


# nice decompositions -----------------------------------------------------

@dataclass
class NiceNode:
    kind: str  # leaf, introduce, forget, join
    bag: frozenset
    vertex: int | None = None
    children: tuple[int, ...] = ()


@dataclass
class NiceTreeDecomposition:
    nodes: list[NiceNode]
    root: int

    @property
    def width(self) -> int:
        return max(len(nd.bag) for nd in self.nodes) - 1


def validate_nice(ntd: NiceTreeDecomposition):
    for nd in ntd.nodes:
        kids = [ntd.nodes[c] for c in nd.children]
        if nd.kind == "leaf":
            ok = not kids and not nd.bag
        elif nd.kind == "introduce":
            ok = len(kids) == 1 and nd.vertex not in kids[0].bag and nd.bag == kids[0].bag | {nd.vertex}
        elif nd.kind == "forget":
            ok = len(kids) == 1 and nd.vertex in kids[0].bag and nd.bag == kids[0].bag - {nd.vertex}
        elif nd.kind == "join":
            ok = len(kids) == 2 and kids[0].bag == kids[1].bag == nd.bag
        else:
            ok = False
        if not ok:
            raise DecompositionError(f"malformed {nd.kind} node")
    if ntd.nodes[ntd.root].bag:
        raise DecompositionError("root bag must be empty")


def make_nice(td: TreeDecomposition) -> NiceTreeDecomposition:
    nodes: list[NiceNode] = []

    def add(kind, bag, vertex=None, children=()):
        nodes.append(NiceNode(kind, frozenset(bag), vertex, tuple(children)))
        return len(nodes) - 1

    def morph(top: int, target: frozenset) -> int:
        bag = nodes[top].bag
        for v in sorted(bag - target):
            bag = bag - {v}
            top = add("forget", bag, v, (top,))
        for v in sorted(target - bag):
            bag = bag | {v}
            top = add("introduce", bag, v, (top,))
        return top

    nb = len(td.bags)
    adj = [[] for _ in range(nb)]
    for a, b in td.edges:
        adj[a].append(b)
        adj[b].append(a)
    parent = [-1] * nb
    order = [0]
    seen = {0}
    for a in order:
        for b in sorted(adj[a]):
            if b not in seen:
                seen.add(b)
                parent[b] = a
                order.append(b)
    built = {}
    for a in reversed(order):
        kids = [built[b] for b in sorted(adj[a]) if parent[b] == a]
        target = td.bags[a]
        if not kids:
            top = morph(add("leaf", ()), target)
        else:
            tops = [morph(c, target) for c in kids]
            while len(tops) > 1:
                merged = [add("join", target, None, (tops[i], tops[i + 1])) for i in range(0, len(tops) - 1, 2)]
                if len(tops) % 2:
                    merged.append(tops[-1])
                tops = merged
            top = tops[0]
        built[a] = top
    root = morph(built[0], frozenset())
    ntd = NiceTreeDecomposition(nodes, root)
    validate_nice(ntd)
    return ntd


# configuration DP --------------------------------------------------------

def _post_order(ntd: NiceTreeDecomposition) -> list[int]:
    out = []
    stack = [(ntd.root, False)]
    while stack:
        v, done = stack.pop()
        if done:
            out.append(v)
            continue
        stack.append((v, True))
        for c in reversed(ntd.nodes[v].children):
            stack.append((c, False))
    return out


def _better(a, b) -> bool:
    """Configuration value a = (sigma, beta) beats b: larger weight, then smaller assignment."""
    return a[0] > b[0] or (a[0] == b[0] and a[1] < b[1])


def _put(table, mu, val):
    old = table.get(mu)
    if old is None or _better(val, old):
        table[mu] = val


def dp_treedecomp(f: WeightedCnf, ntd: NiceTreeDecomposition, check: bool = False):
    """(best soft weight, assignment) or None when infeasible.

    A configuration maps mu (bitmask over incidence vertex ids in the bag: value
    of a bag variable, satisfied flag of a bag clause) to (sigma, beta), the best
    soft weight over clauses introduced below and the assignment reaching it.
    """
    n, m = f.n, f.m
    g = incidence_graph(f)
    covered = set().union(*(nd.bag for nd in ntd.nodes))
    if covered != set(range(g.n)):
        raise DecompositionError("decomposition does not cover the incidence graph")
    validate_nice(ntd)
    for u, v in g.edges:
        if not any(u in nd.bag and v in nd.bag for nd in ntd.nodes):
            raise DecompositionError(f"incidence edge ({u}, {v}) is in no bag")
    clause_of = {n + i: (f.clauses[i], f.weights[i]) for i in range(m)}

    def lit_true(mu, lit):
        return bool(mu >> (abs(lit) - 1) & 1) == (lit > 0)

    tables: dict[int, dict] = {}
    below: dict[int, frozenset] = {}
    for v in _post_order(ntd):
        nd = ntd.nodes[v]
        kids = nd.children
        if nd.kind == "leaf":
            table = {0: (0, 0)}
            below[v] = frozenset()
        elif nd.kind == "introduce":
            child = tables.pop(kids[0])
            below[v] = below[kids[0]] | {nd.vertex}
            table = {}
            u = nd.vertex
            if u < n:
                x = u + 1
                bag_clauses = [c for c in nd.bag if c >= n and any(abs(lit) == x for lit in clause_of[c][0])]
                for mu, (sigma, beta) in child.items():
                    for value in (0, 1):
                        mu2 = mu | (1 << u) if value else mu
                        s2 = sigma
                        for c in bag_clauses:
                            if mu2 >> c & 1:
                                continue
                            clause, w = clause_of[c]
                            if any(abs(lit) == x and lit_true(mu2, lit) for lit in clause):
                                mu2 |= 1 << c
                                if w is not HARD:
                                    s2 += w
                        _put(table, mu2, (s2, beta | (_bit(n, x) if value else 0)))
            else:
                clause, w = clause_of[u]
                for mu, (sigma, beta) in child.items():
                    sat = any(abs(lit) - 1 in nd.bag and lit_true(mu, lit) for lit in clause)
                    if sat:
                        _put(table, mu | (1 << u), (sigma + (0 if w is HARD else w), beta))
                    else:
                        _put(table, mu, (sigma, beta))
        elif nd.kind == "forget":
            child = tables.pop(kids[0])
            below[v] = below[kids[0]]
            u = nd.vertex
            hard = u >= n and clause_of[u][1] is HARD
            table = {}
            for mu, val in child.items():
                if hard and not mu >> u & 1:
                    continue
                _put(table, mu & ~(1 << u), val)
        else:
            left, right = tables.pop(kids[0]), tables.pop(kids[1])
            below[v] = below[kids[0]] | below[kids[1]]
            var_mask = sum(1 << u for u in nd.bag if u < n)
            soft_bag = [(c, clause_of[c][1]) for c in nd.bag if c >= n and clause_of[c][1] is not HARD]
            groups: dict[int, list] = {}
            for mu, val in right.items():
                groups.setdefault(mu & var_mask, []).append((mu, val))
            table = {}
            for mu1, (s1, b1) in left.items():
                for mu2, (s2, b2) in groups.get(mu1 & var_mask, ()):
                    both = sum(w for c, w in soft_bag if mu1 >> c & 1 and mu2 >> c & 1)
                    _put(table, mu1 | mu2, (s1 + s2 - both, b1 | b2))
        if len(table) > 1 << len(nd.bag):
            raise AssertionError("configuration set larger than 2^|bag|")
        if check:
            _check_configs(f, nd, below[v], table)
        tables[v] = table
    root = tables[ntd.root]
    if not root:
        return None
    weight, beta = root[0]
    beta = _to_tuple(n, beta)
    _check_witness(f, weight, beta)
    return weight, beta


def _check_configs(f: WeightedCnf, nd: NiceNode, sub: frozenset, table):
    """Assert the configuration invariants at one node (used by tests)."""
    n = f.n
    for mu, (sigma, beta) in table.items():
        vals = _to_tuple(n, beta)
        soft = 0
        for c in sub:
            if c < n:
                if c in nd.bag and (mu >> c & 1) != vals[c]:
                    raise AssertionError("mu disagrees with beta on a bag variable")
                continue
            clause, w = f.clauses[c - n], f.weights[c - n]
            sat = any(abs(lit) - 1 in sub and (vals[abs(lit) - 1] == 1) == (lit > 0) for lit in clause)
            if c in nd.bag and bool(mu >> c & 1) != sat:
                raise AssertionError("mu flag disagrees with beta on a bag clause")
            if w is HARD and c not in nd.bag and not sat:
                raise AssertionError("forgotten hard clause is unsatisfied")
            if w is not HARD and sat:
                soft += w
        if soft != sigma:
            raise AssertionError("sigma disagrees with the subtree weight")


# vertex cover route ------------------------------------------------------

def _complete(n: int, clauses, fixed: dict[int, int]):
    """Lexicographically least extension of ``fixed`` satisfying every clause, or None."""
    free = sorted({abs(lit) for c in clauses for lit in c} - set(fixed))
    vals = dict(fixed)

    def state(c):
        undecided = False
        for lit in c:
            x = abs(lit)
            if x in vals:
                if (vals[x] == 1) == (lit > 0):
                    return 1
            else:
                undecided = True
        return 0 if undecided else -1

    def go(i):
        if any(state(c) < 0 for c in clauses):
            return False
        if i == len(free):
            return True
        for value in (0, 1):
            vals[free[i]] = value
            if go(i + 1):
                return True
        del vals[free[i]]
        return False

    return vals if go(0) else None


def solve_partial_vc(f: WeightedCnf, k: int):
    """Returns ("reject", None) if the incidence graph has no cover of size k,
    ("infeasible", None) or ("optimal", (weight, assignment, cover))."""
    n = f.n
    g = incidence_graph(f)
    kern = buss_kernel(g, k)
    if kern is None:
        return "reject", None
    X = vertex_cover(g, k)
    if X is None:
        return "reject", None
    xs = set(X)
    v1 = [v + 1 for v in sorted(xs) if v < n]
    c1 = [c - n for c in sorted(xs) if c >= n]
    c2 = [i for i in range(f.m) if n + i not in xs]
    best = None
    for bits in range(1 << len(v1)):
        fixed = {x: (bits >> (len(v1) - 1 - j)) & 1 for j, x in enumerate(v1)}

        def sat(clause):
            return any((fixed[abs(lit)] == 1) == (lit > 0) for lit in clause if abs(lit) in fixed)

        weight = 0
        dead = False
        for i in c2:
            if sat(f.clauses[i]):
                if f.weights[i] is not HARD:
                    weight += f.weights[i]
            elif f.weights[i] is HARD:
                dead = True
                break
        if dead:
            continue
        hard_open, soft_open = [], []
        for i in c1:
            if sat(f.clauses[i]):
                if f.weights[i] is not HARD:
                    weight += f.weights[i]
            elif f.weights[i] is HARD:
                hard_open.append(i)
            else:
                soft_open.append(i)
        subsets = sorted(
            (s for r in range(len(soft_open) + 1) for s in combinations(soft_open, r)),
            key=lambda s: -checked_sum(f.weights[i] for i in s),
        )
        for s in subsets:
            need = [f.clauses[i] for i in hard_open + list(s)]
            vals = _complete(n, need, fixed)
            if vals is None:
                continue
            beta = tuple(vals.get(x, 0) for x in range(1, n + 1))
            cand = (count_weighted(beta, f)[1], beta)
            if best is None or cand[0] > best[0] or (cand[0] == best[0] and cand[1] < best[1]):
                best = cand
            break
    if best is None:
        return "infeasible", None
    _check_witness(f, best[0], best[1])
    return "optimal", (best[0], best[1], X)


# dispatcher ----------------------------------------------------------------

@dataclass
class PartialResult:
    status: str  # optimal, infeasible, reject
    weight: int | None
    assignment: tuple[int, ...] | None
    param: str
    param_value: int | None
    stats: dict = field(default_factory=dict)


def solve_partial(f: WeightedCnf, k: int, param: str, workers: int = 1) -> PartialResult:
    g = incidence_graph(f)
    if param == "vc":
        status, out = solve_partial_vc(f, k)
        if status != "optimal":
            return PartialResult(status, None, None, param, None)
        return PartialResult(status, out[0], out[1], param, len(out[2]), {"cover": list(out[2])})
    if param == "td":
        forest = treedepth_forest(g, k)
        if forest is None:
            return PartialResult("reject", None, None, param, None)
        out = dpll_td(f, forest)
        stats = {"depth": forest.depth}
        value = forest.depth
    elif param in ("fvs", "tw"):
        if param == "fvs":
            X = fvs(g, k, workers)
            if X is None:
                return PartialResult("reject", None, None, param, None)
            td = td_from_fvs(g, X)
            value = len(X)
        else:
            td = treewidth_decomposition(g, k)
            if td is None:
                return PartialResult("reject", None, None, param, None)
            value = td.width
        ntd = make_nice(td)
        out = dp_treedecomp(f, ntd)
        stats = {"width": td.width, "bags": len(td.bags), "nice_nodes": len(ntd.nodes)}
    else:
        raise ValueError(f"unknown parameter {param!r}")
    if out is None:
        return PartialResult("infeasible", None, None, param, value, stats)
    return PartialResult("optimal", out[0], out[1], param, value, stats)
