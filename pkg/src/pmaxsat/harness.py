"""Seeded instance generators and solver-versus-oracle checks.

Every ``check_*`` function draws one instance from ``rng``, runs the solver and
the matching brute-force oracle, re-verifies any certificate and returns a
``Check``. The test suite, ``bench`` and ``selftest`` all go through here.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations, product

from .cnf2 import max_nae_sat2_value, max_sat2_value
from .colorcoding import solve_max_k
from .cover import solve_almost_dnf, solve_min_sat, vertex_cover
from .dual2sat import solve_almost_2sat, solve_almost_nae_2sat
from .flow import Network, flow_of_value_k, flow_value, validate_flow
from .formula import (
    HARD, NAE, SAT, TERM, CnfFormula, DnfFormula, WeightedCnf, count_satisfied, count_weighted,
    eval_clause, exact, guaranteed_half,
)
from .graph import Graph
from .guarantee import solve_above_half
from .oracle import brute_almost, brute_max, brute_max_flow, brute_min_sat, brute_vertex_cover, brute_weighted
from .structural import solve_partial
from .vcmatch import solve_vc_above_matching


@dataclass
class Check:
    ok: bool
    detail: dict = field(default_factory=dict)
    certificates: int = 0


def random_clause(rng: random.Random, n: int, lo: int, hi: int) -> tuple[int, ...]:
    if n == 0:
        return ()
    return tuple(rng.choice((-1, 1)) * rng.randint(1, n) for _ in range(rng.randint(lo, hi)))


def random_cnf(rng, n, m, lo=1, hi=3) -> CnfFormula:
    return CnfFormula(n, [random_clause(rng, n, lo, hi) for _ in range(m)])


def random_cnf2(rng, n, m) -> CnfFormula:
    """Every variable occurs at most twice."""
    cl: list[list[int]] = [[] for _ in range(m)]
    if m:
        slots = [x for x in range(1, n + 1) for _ in range(2)]
        rng.shuffle(slots)
        for x in slots[: rng.randint(0, len(slots))]:
            cl[rng.randrange(m)].append(rng.choice((-1, 1)) * x)
    return CnfFormula(n, cl)


def random_weighted(rng, n, m, hard_p=0.25, wmax=3) -> WeightedCnf:
    f = random_cnf(rng, n, m, 1, 3)
    ws = tuple(HARD if rng.random() < hard_p else rng.randint(1, wmax) for _ in range(m))
    return WeightedCnf(f, ws)


def random_graph(rng, n, p=None) -> Graph:
    p = rng.random() if p is None else p
    return Graph(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def greedy_matching(g: Graph) -> list[tuple[int, int]]:
    used = set()
    out = []
    for u, v in g.edges:
        if u not in used and v not in used:
            used.update((u, v))
            out.append((u, v))
    return out


def random_network(rng, nv, p=None) -> Network:
    p = rng.random() if p is None else p
    arcs = []
    for u, v in combinations(range(nv), 2):
        if rng.random() < p:
            arcs.append((u, v) if rng.random() < 0.5 else (v, u))
    return Network(nv, arcs, 0, nv - 1)


MODES = (SAT, NAE, TERM, exact(1), exact(2))


def check_maxk(rng, nmax=8, mmax=8) -> Check:
    n, m = rng.randint(1, nmax), rng.randint(0, mmax)
    f = random_cnf(rng, n, m, 0 if rng.random() < 0.1 else 1, 3)
    mode = rng.choice(MODES)
    k = rng.randint(0, m)
    ok, beta = solve_max_k(f, k, mode)
    best = brute_max(f, mode)[0]
    good = ok == (best >= k) and (not ok or count_satisfied(beta, f, mode) >= k)
    return Check(good, {"mode": str(mode), "k": k, "best": best}, int(ok))


def check_abovehalf(rng, nmax=8, mmax=10) -> Check:
    n, m = rng.randint(1, nmax), rng.randint(0, mmax)
    f = random_cnf(rng, n, m, 0 if rng.random() < 0.1 else 1, 3)
    g = rng.randint(0, 3)
    ok, beta, _ = solve_above_half(f, g)
    target = guaranteed_half(f) + g
    good = ok == (brute_max(f)[0] >= target)
    if beta is not None:
        good = good and count_satisfied(beta, f) >= target
    return Check(good, {"g": g}, int(beta is not None))


def check_almost2sat(rng, nmax=8, mmax=10) -> Check:
    n, m = rng.randint(1, nmax), rng.randint(0, mmax)
    f = random_cnf(rng, n, m, 0 if rng.random() < 0.1 else 1, 2)
    nae = rng.random() < 0.5
    k = rng.randint(0, 4)
    res = (solve_almost_nae_2sat if nae else solve_almost_2sat)(f, k)
    mode = NAE if nae else SAT
    best = brute_almost(f, mode)
    good = res.answer == (best <= k)
    if res.answer:
        drop = set(res.deleted)
        good = good and len(drop) <= k and all(
            eval_clause(res.assignment, c, mode) for i, c in enumerate(f.clauses) if i not in drop)
    return Check(good, {"nae": nae, "k": k, "best": best}, int(res.answer))


def check_cnf2(rng, nmax=10, mmax=10) -> Check:
    f = random_cnf2(rng, rng.randint(1, nmax), rng.randint(0, mmax))
    a, b = max_sat2_value(f)[0], max_nae_sat2_value(f)[0]
    return Check(a == brute_max(f, SAT)[0] and b == brute_max(f, NAE)[0])


def check_minsat(rng, nmax=8, mmax=8) -> Check:
    n, m = rng.randint(1, nmax), rng.randint(0, mmax)
    k = rng.randint(0, m)
    if rng.random() < 0.5:
        f = random_cnf(rng, n, m, 0, 3)
        ok, beta = solve_min_sat(f, k)
        good = ok == (brute_min_sat(f)[0] <= k) and (not ok or count_satisfied(beta, f) <= k)
    else:
        d = DnfFormula(n, [random_clause(rng, n, 0, 3) for _ in range(m)])
        ok, beta = solve_almost_dnf(d, k)
        good = ok == (brute_max(d, TERM)[0] >= m - k) and (not ok or count_satisfied(beta, d) >= m - k)
    return Check(good, {"k": k}, int(ok))


def check_vc(rng, nmax=10) -> Check:
    g = random_graph(rng, rng.randint(0, nmax))
    k = rng.randint(0, 6)
    cover = vertex_cover(g, k)
    best = brute_vertex_cover(g)[0]
    good = (cover is not None) == (best <= k) and (cover is None or (g.is_vertex_cover(cover) and len(cover) <= k))
    return Check(good, {"k": k, "best": best}, int(cover is not None))


def check_vcam(rng, nmax=10) -> Check:
    g = random_graph(rng, rng.randint(0, nmax))
    matching = greedy_matching(g)
    gp = rng.randint(0, 3)
    res = solve_vc_above_matching(g, matching, gp)
    best = brute_vertex_cover(g)[0]
    good = res.answer == (best <= len(matching) + gp)
    if res.answer:
        good = good and g.is_vertex_cover(res.cover) and len(res.cover) <= len(matching) + gp
    good = good and res.rounds <= 2 * gp + 1 and res.max_growth <= 2
    return Check(good, {"g": gp, "rounds": res.rounds, "growth": res.max_growth}, int(res.answer))


def check_flow(rng, vmax=12) -> Check:
    net = random_network(rng, rng.randint(2, vmax))
    k = rng.randint(0, 6)
    f = flow_of_value_k(net, k)
    validate_flow(net, f)
    good = flow_value(net, f) == min(k, brute_max_flow(net))
    return Check(good, {"k": k})


def check_partial(rng, nmax=8, mmax=8) -> Check:
    f = random_weighted(rng, rng.randint(0, nmax), rng.randint(0, mmax))
    best = brute_weighted(f)[0]
    good = True
    certs = 0
    for param, k in (("vc", 16), ("td", 5), ("fvs", 6), ("tw", 6)):
        r = solve_partial(f, k, param)
        if r.status == "reject":
            good = False
            continue
        got = r.weight if r.status == "optimal" else None
        good = good and got == best
        if r.assignment is not None:
            certs += 1
            ok, w = count_weighted(r.assignment, f)
            good = good and ok and w == r.weight
    return Check(good, {"best": best}, certs)


FAMILIES = {
    "maxk": check_maxk,
    "abovehalf": check_abovehalf,
    "almost2sat": check_almost2sat,
    "cnf2": check_cnf2,
    "minsat": check_minsat,
    "vc": check_vc,
    "vcam": check_vcam,
    "flow": check_flow,
    "partial": check_partial,
}


def run_family(name: str, seed: int, count: int) -> dict:
    """Run ``count`` checks of one family; report agreement and timing percentiles (ms)."""
    rng = random.Random(f"{name}:{seed}")
    check = FAMILIES[name]
    times = []
    failures = []
    certs = 0
    for i in range(count):
        t0 = time.perf_counter()
        out = check(rng)
        times.append((time.perf_counter() - t0) * 1000)
        certs += out.certificates
        if not out.ok:
            failures.append({"index": i, **out.detail})
    times.sort()

    def pct(q):
        return round(times[min(len(times) - 1, int(q * len(times)))], 3) if times else 0.0

    return {
        "family": name,
        "seed": seed,
        "count": count,
        "agree": count - len(failures),
        "certificates": certs,
        "failures": failures[:5],
        "p50_ms": pct(0.5),
        "p95_ms": pct(0.95),
        "max_ms": round(times[-1], 3) if times else 0.0,
    }


def canonical_cnfs(n: int = 4, m_max: int = 5):
    """One CNF per class of clause multisets (m <= m_max) under renaming and sign flips of n variables.

    Clauses are the 3^n sets of non-complementary literals (including the empty
    clause). A class is represented by its lexicographically least sorted tuple of
    clause ids; classes are grown one clause at a time. Yields CnfFormula(n, ...).
    """
    import itertools

    import numpy as np

    pool = sorted(itertools.product(range(3), repeat=n), key=lambda c: (sum(x > 0 for x in c), c))
    idx = {c: i for i, c in enumerate(pool)}
    maps = []
    for perm in itertools.permutations(range(n)):
        for flip in itertools.product((0, 1), repeat=n):
            row = []
            for c in pool:
                d = [0] * n
                for v, x in enumerate(c):
                    d[perm[v]] = 3 - x if x and flip[v] else x
                row.append(idx[tuple(d)])
            maps.append(row)
    sym = np.array(maps, dtype=np.int64)
    size = len(pool)
    clauses = [tuple((v + 1) * (1 if x == 1 else -1) for v, x in enumerate(c) if x) for c in pool]

    def emit(rows):
        for r in rows:
            yield CnfFormula(n, [clauses[i] for i in r])

    reps = np.zeros((1, 0), dtype=np.int64)
    yield from emit(reps)
    for m in range(1, m_max + 1):
        ext = np.concatenate([np.repeat(reps, size, 0), np.tile(np.arange(size), len(reps))[:, None]], 1)
        keys = []
        for start in range(0, len(ext), 16384):
            img = np.sort(sym[:, ext[start:start + 16384]], axis=2)
            key = np.zeros(img.shape[:2], dtype=np.int64)
            for j in range(m):
                key = key * size + img[:, :, j]
            keys.append(key.min(0))
        keys = np.unique(np.concatenate(keys))
        reps = np.zeros((len(keys), m), dtype=np.int64)
        for j in range(m - 1, -1, -1):
            reps[:, j] = keys % size
            keys //= size
        yield from emit(reps)


def _canonical_key(n: int, adj: list[int]) -> int:
    """Largest upper-triangle bit string over relabellings that respect colour refinement."""
    colours = [0] * n
    while True:
        sig = [(colours[v], sorted(colours[w] for w in range(n) if adj[v] >> w & 1)) for v in range(n)]
        ranks = {s: i for i, s in enumerate(sorted(set(map(repr, sig))))}
        new = [ranks[repr(s)] for s in sig]
        if len(set(new)) == len(set(colours)):
            break
        colours = new
    cells = [[v for v in range(n) if colours[v] == c] for c in sorted(set(colours))]
    best = None
    for parts in product(*(permutations(c) for c in cells)):
        order = [v for p in parts for v in p]
        key = 0
        for i in range(n):
            row = adj[order[i]]
            for j in range(i + 1, n):
                key = key << 1 | (row >> order[j] & 1)
        if best is None or key > best:
            best = key
    return best


@lru_cache(maxsize=None)
def graph_classes(n: int) -> tuple[Graph, ...]:
    """One graph per isomorphism class on exactly n vertices.

    Every graph on n vertices is a graph on n - 1 vertices plus one vertex, so
    extending each class representative by every neighbourhood and keeping one
    graph per canonical key reaches all classes.
    """
    if n == 0:
        return (Graph(0, []),)
    seen = set()
    out = []
    for base in graph_classes(n - 1):
        adj0 = [0] * n
        for u, v in base.edges:
            adj0[u] |= 1 << v
            adj0[v] |= 1 << u
        for mask in range(1 << (n - 1)):
            adj = list(adj0)
            for u in range(n - 1):
                if mask >> u & 1:
                    adj[u] |= 1 << (n - 1)
                    adj[n - 1] |= 1 << u
            key = _canonical_key(n, adj)
            if key not in seen:
                seen.add(key)
                out.append(Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if adj[u] >> v & 1]))
    return tuple(out)
