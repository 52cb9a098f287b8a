"""Acceptance criteria, one test each; the terminal summary prints a pass/fail line per criterion.

Tolerances are exact everywhere (agreement counts must be 100%). Time limits:
figure < 1 s, exhaustive corpus < 600 s, each randomized family < 600 s.
"""

import os
import random
import subprocess
import sys
import time
from fractions import Fraction
from itertools import combinations, product
from pathlib import Path

import pytest

from pmaxsat.cnf2 import check_cnf2, max_nae_sat2_value, max_sat2_value
from pmaxsat.colorcoding import solve_max_k, universal_coloring_family, verify_universal
from pmaxsat.cover import solve_almost_dnf, solve_min_sat, vertex_cover
from pmaxsat.dual2sat import solve_almost_2sat, solve_almost_nae_2sat
from pmaxsat.flow import augment, flow_of_value_k, flow_value, validate_flow
from pmaxsat.formula import (
    HARD, NAE, SAT, TERM, CnfFormula, DnfFormula, WeightedCnf, count_satisfied, count_weighted, eval_clause,
    exact, expected_satisfied, guaranteed_half,
)
from pmaxsat.graph import figure_graph
from pmaxsat.guarantee import evaluate_polynomial, expand_polynomial, solve_above_half
from pmaxsat.harness import (
    FAMILIES, canonical_cnfs, check_vcam, graph_classes, greedy_matching, random_clause, random_cnf,
    random_cnf2, random_graph, random_network, random_weighted, run_family,
)
from pmaxsat.oracle import (
    brute_almost, brute_halfintegral_vc, brute_max, brute_max_flow, brute_min_sat, brute_vertex_cover,
    brute_weighted,
)
from pmaxsat.structural import fvs, is_forest_after, solve_partial
from pmaxsat.vcmatch import (
    flow_to_alpha, hochbaum, maximal_triple, optimal_beta, solve_vc_above_matching, validate_alpha,
)

from test_cli import COMMANDS, _subprocess

RANDOM_COUNT = 10_000
FAMILY_LIMIT_S = 600
CORPUS_LIMIT_S = 600
MAXK_MODES = (SAT, NAE, TERM, exact(1), exact(2))
PARTIAL_PARAMS = (("vc", 16), ("td", 5), ("fvs", 6), ("tw", 6))
# with 4 variables the incidence graph has vc, fvs and tw at most 4 and DFS depth at most 9 <= 2^4
CORPUS_PARAMS = (("vc", 4), ("td", 4), ("fvs", 4), ("tw", 4))


def _max_matching(g):
    for size in range(len(g.edges), -1, -1):
        if any(g.is_matching(es) for es in combinations(g.edges, size)):
            return size


def test_criterion_1_figure(criterion):
    t0 = time.perf_counter()
    g = figure_graph()
    beta, _ = optimal_beta(g, (0,) * len(g.edges), g.n)
    net = hochbaum(g)
    top = flow_value(net, flow_of_value_k(net, 100))
    no = solve_vc_above_matching(g, [(0, 1), (2, 3)], 0)
    yes = solve_vc_above_matching(g, [(0, 1), (2, 3)], 1)
    got = {
        "lp": Fraction(sum(beta), 2),
        "lp_oracle": Fraction(brute_halfintegral_vc(g), 2),
        "flow": top,
        "matching": _max_matching(g),
        "vc": brute_vertex_cover(g)[0],
        "vcam_g0": no.answer,
        "vcam_g1": yes.answer and len(yes.cover) == 3 and g.is_vertex_cover(yes.cover),
    }
    elapsed = time.perf_counter() - t0
    want = {"lp": Fraction(5, 2), "lp_oracle": Fraction(5, 2), "flow": 5, "matching": 2, "vc": 3,
            "vcam_g0": False, "vcam_g1": True}
    ok = got == want and elapsed < 1.0
    criterion(1, ok, f"LP 2.5, flow 5, matching 2, VC 3, vcam no/yes; {elapsed:.3f}s (limit 1s)")
    assert ok, got


def _weights(index, m):
    rng = random.Random(f"weights:{index}")
    return tuple(HARD if rng.random() < 0.25 else rng.randint(1, 3) for _ in range(m))


def _bundle(index, f):
    """Every solver on one formula; returns the list of disagreements."""
    bad = []
    for mode in MAXK_MODES:
        best = brute_max(f, mode)[0]
        for k in range(f.m + 1):
            ok, beta = solve_max_k(f, k, mode)
            if ok != (best >= k) or (ok and count_satisfied(beta, f, mode) < k):
                bad.append(("maxk", str(mode), k))
    best = brute_max(f)[0]
    for g in range(4):
        ok, beta, _ = solve_above_half(f, g)
        target = guaranteed_half(f) + g
        if ok != (best >= target) or (beta is not None and count_satisfied(beta, f) < target):
            bad.append(("abovehalf", g))
    least = brute_min_sat(f)[0]
    for k in range(f.m + 1):
        ok, beta = solve_min_sat(f, k)
        if ok != (least <= k) or (ok and count_satisfied(beta, f) > k):
            bad.append(("minsat", k))
    if all(len(c) <= 2 for c in f.clauses):
        for mode, solve in ((SAT, solve_almost_2sat), (NAE, solve_almost_nae_2sat)):
            need = brute_almost(f, mode)
            for k in range(f.m + 1):
                res = solve(f, k)
                if res.answer != (need <= k):
                    bad.append(("almost", str(mode), k))
                elif res.answer and not all(eval_clause(res.assignment, c, mode)
                                            for i, c in enumerate(f.clauses) if i not in set(res.deleted)):
                    bad.append(("almost-cert", str(mode), k))
    if check_cnf2(f):
        if max_sat2_value(f)[0] != best or max_nae_sat2_value(f)[0] != brute_max(f, NAE)[0]:
            bad.append(("cnf2",))
    wf = WeightedCnf(f, _weights(index, f.m))
    wbest = brute_weighted(wf)[0]
    for param, k in CORPUS_PARAMS:
        r = solve_partial(wf, k, param)
        if r.status == "reject" or r.weight != wbest or (r.assignment is not None and count_weighted(r.assignment, wf) != (True, wbest)):
            bad.append(("partial", param))
    return bad


@pytest.mark.slow
def test_criterion_2_exhaustive_corpus(criterion):
    t0 = time.perf_counter()
    count = 0
    failures = []
    for index, f in enumerate(canonical_cnfs(4, 5)):
        count += 1
        bad = _bundle(index, f)
        if bad:
            failures.append((f.clauses, bad[:3]))
    elapsed = time.perf_counter() - t0
    ok = not failures and elapsed < CORPUS_LIMIT_S
    criterion(2, ok, f"{count - len(failures)}/{count} canonical CNFs (n=4, m<=5) agree; "
                     f"{elapsed:.0f}s (limit {CORPUS_LIMIT_S}s)")
    assert ok, failures[:5]


@pytest.mark.slow
def test_criterion_3_randomized(criterion):
    rows = []
    for family in sorted(FAMILIES):
        t0 = time.perf_counter()
        row = run_family(family, 0, RANDOM_COUNT)
        rows.append((family, row["agree"], row["count"], time.perf_counter() - t0, row["failures"]))
    ok = all(a == c == RANDOM_COUNT and s < FAMILY_LIMIT_S for _, a, c, s, _ in rows)
    slowest = max(s for *_, s, _ in rows)
    summary = ", ".join(f"{fam} {a}/{c}" for fam, a, c, _, _ in rows)
    criterion(3, ok, f"{summary}; slowest family {slowest:.1f}s (limit {FAMILY_LIMIT_S}s)")
    assert ok, [r for r in rows if r[1] != r[2]]


def test_criterion_4_flow_laws(criterion):
    rng = random.Random("flow-laws")
    bad = 0
    nets = 1000
    for _ in range(nets):
        net = random_network(rng, rng.randint(2, 12))
        k = rng.randint(0, 8)
        top = brute_max_flow(net)
        f = net.empty_flow()
        for step in range(k):
            f = augment(net, f)
            validate_flow(net, f)
            if flow_value(net, f) != min(step + 1, top):
                bad += 1
        got = flow_of_value_k(net, k)
        validate_flow(net, got)
        if flow_value(net, got) != min(k, top):
            bad += 1
    ok = bad == 0
    criterion(4, ok, f"{nets} random unit networks (<=12 vertices), {bad} violations of value/conservation")
    assert ok


@pytest.mark.slow
def test_criterion_5_lp_structure(criterion):
    checked = bad = 0
    for n in range(9):
        for g in graph_classes(n):
            alpha = flow_to_alpha(maximal_triple(g))
            validate_alpha(g, alpha)
            beta, _ = optimal_beta(g, (0,) * len(g.edges), g.n)
            checked += 1
            if not (sum(alpha) == brute_halfintegral_vc(g) == sum(beta)):
                bad += 1
    ok = bad == 0 and checked == 13599
    criterion(5, ok, f"{checked - bad}/{checked} graph classes on <=8 vertices: alpha feasible, "
                     "half-integral, |alpha| = LP oracle = |beta|")
    assert ok


@pytest.mark.slow
def test_criterion_6_search_depth(criterion):
    rng = random.Random("vcam:0")
    worst_slack = -10**9
    widest = 0
    for _ in range(RANDOM_COUNT):
        d = check_vcam(rng).detail
        worst_slack = max(worst_slack, d["rounds"] - (2 * d["g"] + 1))
        widest = max(widest, d["growth"])
    ok = worst_slack <= 0 and widest <= 2
    criterion(6, ok, f"{RANDOM_COUNT} vcam runs: max rounds - (2g+1) = {worst_slack}, max growth {widest} (<= 2)")
    assert ok


def test_criterion_7_certificates(criterion):
    rng = random.Random("certificates")
    emitted = verified = 0

    def tally(good):
        nonlocal emitted, verified
        emitted += 1
        verified += bool(good)

    for _ in range(300):
        f = random_cnf(rng, rng.randint(1, 8), rng.randint(1, 8), 1, 3)
        for mode in MAXK_MODES:
            k = brute_max(f, mode)[0]
            ok, beta = solve_max_k(f, k, mode)
            if ok:
                tally(count_satisfied(beta, f, mode) >= k)
        ok, beta, _ = solve_above_half(f, rng.randint(0, 2))
        if beta is not None:
            tally(count_satisfied(beta, f) >= guaranteed_half(f))
        k = brute_min_sat(f)[0]
        ok, beta = solve_min_sat(f, k)
        tally(ok and count_satisfied(beta, f) <= k)
        d = DnfFormula(f.n, [random_clause(rng, f.n, 1, 3) for _ in range(f.m)])
        k = d.m - brute_max(d, TERM)[0]
        ok, beta = solve_almost_dnf(d, k)
        tally(ok and count_satisfied(beta, d) >= d.m - k)
        two = random_cnf(rng, rng.randint(1, 7), rng.randint(1, 8), 1, 2)
        for mode, solve in ((SAT, solve_almost_2sat), (NAE, solve_almost_nae_2sat)):
            res = solve(two, brute_almost(two, mode))
            drop = set(res.deleted or ())
            tally(res.answer and len(drop) <= brute_almost(two, mode) and all(
                eval_clause(res.assignment, c, mode) for i, c in enumerate(two.clauses) if i not in drop))
        g = random_graph(rng, rng.randint(1, 10))
        k = brute_vertex_cover(g)[0]
        cover = vertex_cover(g, k)
        tally(cover is not None and g.is_vertex_cover(cover) and len(cover) <= k)
        m = greedy_matching(g)
        res = solve_vc_above_matching(g, m, k - len(m))
        tally(res.answer and g.is_vertex_cover(res.cover) and len(res.cover) <= k)
        X = fvs(g, g.n)
        tally(is_forest_after(g, X))
        wf = random_weighted(rng, rng.randint(1, 7), rng.randint(1, 7))
        for param, kk in PARTIAL_PARAMS:
            r = solve_partial(wf, kk, param)
            if r.assignment is not None:
                tally(count_weighted(r.assignment, wf) == (True, r.weight))
    ok = emitted > 0 and emitted == verified
    criterion(7, ok, f"{verified}/{emitted} emitted assignments, deletion sets and covers re-verify")
    assert ok


def test_criterion_8_identities(criterion):
    rng = random.Random("identities")
    points = 0
    bad = 0
    for n in range(1, 11):
        for _ in range(4):
            d = rng.randint(1, min(3, n))
            f = CnfFormula(n, [tuple(rng.choice((-1, 1)) * v for v in rng.sample(range(1, n + 1), d))
                               for _ in range(rng.randint(0, 10))])
            mono = expand_polynomial(f, d)
            e = expected_satisfied(f)
            for beta in product((0, 1), repeat=n):
                points += 1
                bad += evaluate_polynomial(mono, beta) != 2**d * (count_satisfied(beta, f) - e)
    families = 0
    for n in range(1, 9):
        for k in range(0, min(n, 3) + 1):
            for forced in (False, True):
                families += 1
                bad += not verify_universal(universal_coloring_family(n, k, 2, force_hash=forced))
    ok = bad == 0
    criterion(8, ok, f"polynomial identity at {points} points (n<=10); {families} universal families "
                     f"(n<=8, k<=3, c=2); {bad} failures")
    assert ok


def test_criterion_9_determinism(criterion):
    differing = []
    for argv in COMMANDS:
        runs = [_subprocess(argv, w) for w in (1, 1, 4)]
        if len({(r.returncode, r.stdout) for r in runs}) != 1 or not runs[0].stdout:
            differing.append(argv[0])
    rng = random.Random("determinism")
    in_process = 0
    for _ in range(100):
        g = random_graph(rng, rng.randint(0, 10))
        m = greedy_matching(g)
        gp = rng.randint(0, 3)
        two = random_cnf(rng, rng.randint(1, 6), rng.randint(0, 8), 1, 2)
        wf = random_weighted(rng, rng.randint(1, 6), rng.randint(1, 6))
        pairs = [
            (solve_vc_above_matching(g, m, gp, workers=1), solve_vc_above_matching(g, m, gp, workers=4)),
            (vertex_cover(g, gp + 2, workers=1), vertex_cover(g, gp + 2, workers=4)),
            (solve_almost_2sat(two, gp, workers=1), solve_almost_2sat(two, gp, workers=4)),
            (solve_partial(wf, 6, "fvs", workers=1), solve_partial(wf, 6, "fvs", workers=4)),
        ]
        for a, b in pairs:
            in_process += 1
            if a != b:
                differing.append("in-process")
    ok = not differing
    criterion(9, ok, f"{len(COMMANDS)} CLI runs x3 (twice at 1 worker, once at 4) byte-identical; "
                     f"{in_process} solver calls equal at 1 vs 4 workers")
    assert ok, differing
