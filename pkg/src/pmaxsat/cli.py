"""Command-line front end.

Every subcommand prints one JSON object (sorted keys) on stdout.
Exit codes: 0 yes/solved, 1 no, 2 parameter rejected, 3 bad input.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time

from . import harness, kernels
from .cnf2 import max_nae_sat2_value, max_sat2_value
from .colorcoding import solve_max_k
from .cover import solve_almost_dnf, solve_min_sat, vertex_cover
from .dual2sat import solve_almost_2sat, solve_almost_nae_2sat
from .engine import default_workers
from .flow import (
    FlowError, flow_of_value_k, flow_value, max_flow, normalize_capacities, parse_dimacs_max, validate_flow,
)
from .formula import (
    NAE, SAT, TERM, FormulaError, count_satisfied, count_weighted, eval_clause, exact, guaranteed_half,
    parse_dimacs_cnf, parse_dimacs_dnf, parse_wcnf,
)
from .graph import GraphError, figure_graph, parse_dimacs_graph, parse_edge_list
from .guarantee import solve_above_half, solve_edsat_aa
from .oracle import OracleLimitError, brute_almost, brute_max, brute_min_sat, brute_vertex_cover, brute_weighted
from .structural import solve_partial
from .vcmatch import solve_vc_above_matching

YES, NO, REJECT, BAD_INPUT = 0, 1, 2, 3


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def _read(paths):
    blobs = []
    for p in paths:
        with open(p, "rb") as fh:
            blobs.append(fh.read())
    digest = hashlib.sha256(b"\0".join(blobs)).hexdigest()
    return blobs, digest


def _workers(args) -> int:
    env = os.environ.get("PMAX_WORKERS")
    if env:
        return max(1, int(env))
    return args.workers or default_workers()


def _listed(beta):
    return None if beta is None else list(beta)


def _maxk(args, mode, dnf=False):
    (blob,), digest = _read([args.file])
    f = parse_dimacs_dnf(blob) if dnf else parse_dimacs_cnf(blob)
    ok, beta = solve_max_k(f, args.k, mode)
    if ok and count_satisfied(beta, f, mode) < args.k:
        raise AssertionError("witness does not reach k")
    return YES if ok else NO, digest, {
        "answer": ok, "assignment": _listed(beta), "k": args.k, "mode": str(mode),
        "satisfied": None if beta is None else count_satisfied(beta, f, mode),
    }


def cmd_maxsat(args):
    return _maxk(args, SAT)


def cmd_naesat(args):
    return _maxk(args, NAE)


def cmd_exactsat(args):
    return _maxk(args, exact(args.x))


def cmd_dnf(args):
    return _maxk(args, TERM, dnf=True)


def cmd_abovehalf(args):
    (blob,), digest = _read([args.file])
    f = parse_dimacs_cnf(blob)
    ok, beta, meta = solve_above_half(f, args.g)
    target = guaranteed_half(f) + args.g
    if beta is not None and count_satisfied(beta, f) < target:
        raise AssertionError("witness misses the target")
    return YES if ok else NO, digest, {
        "answer": ok, "assignment": _listed(beta), "g": args.g, "target": target, "route": meta["route"],
    }


def cmd_edsataa(args):
    (blob,), digest = _read([args.file])
    f = parse_dimacs_cnf(blob)
    d = args.d if args.d is not None else max((len(c) for c in f.clauses), default=0)
    ok, beta = solve_edsat_aa(f, args.g, d)
    return YES if ok else NO, digest, {"answer": ok, "assignment": _listed(beta), "g": args.g, "d": d}


def _almost(args, nae):
    (blob,), digest = _read([args.file])
    f = parse_dimacs_cnf(blob)
    res = (solve_almost_nae_2sat if nae else solve_almost_2sat)(f, args.k, workers=_workers(args))
    if res.answer:
        drop = set(res.deleted)
        mode = NAE if nae else SAT
        if len(drop) > args.k or not all(
                eval_clause(res.assignment, c, mode) for i, c in enumerate(f.clauses) if i not in drop):
            raise AssertionError("deletion certificate does not verify")
    return YES if res.answer else NO, digest, {
        "answer": res.answer,
        "deleted_clause_indices": None if res.deleted is None else list(res.deleted),
        "assignment": _listed(res.assignment),
        "stats": {"rounds": res.rounds, "frontier_peak": res.frontier_peak},
    }


def cmd_almost2sat(args):
    return _almost(args, False)


def cmd_almostnae2sat(args):
    return _almost(args, True)


def cmd_cnf2(args):
    (blob,), digest = _read([args.file])
    f = parse_dimacs_cnf(blob)
    value, cores = (max_nae_sat2_value if args.mode == "nae" else max_sat2_value)(f)
    out = {"max_value": value, "cores": cores, "answer_for_k": None}
    code = YES
    if args.k is not None:
        out["answer_for_k"] = value >= f.m - args.k
        code = YES if out["answer_for_k"] else NO
    return code, digest, out


def cmd_minsat(args):
    (blob,), digest = _read([args.file])
    f = parse_dimacs_cnf(blob)
    ok, beta = solve_min_sat(f, args.k, workers=_workers(args))
    if ok and count_satisfied(beta, f) > args.k:
        raise AssertionError("witness satisfies too many clauses")
    return YES if ok else NO, digest, {
        "answer": ok, "assignment": _listed(beta), "satisfied": None if beta is None else count_satisfied(beta, f),
    }


def cmd_almostdnf(args):
    (blob,), digest = _read([args.file])
    f = parse_dimacs_dnf(blob)
    ok, beta = solve_almost_dnf(f, args.k, workers=_workers(args))
    if ok and count_satisfied(beta, f) < f.m - args.k:
        raise AssertionError("witness misses too many terms")
    return YES if ok else NO, digest, {
        "answer": ok, "assignment": _listed(beta), "satisfied": None if beta is None else count_satisfied(beta, f),
    }


def cmd_vc(args):
    (blob,), digest = _read([args.file])
    g = parse_dimacs_graph(blob)
    cover = vertex_cover(g, args.k, workers=_workers(args))
    if cover is not None and (len(cover) > args.k or not g.is_vertex_cover(cover)):
        raise AssertionError("cover does not verify")
    return YES if cover is not None else NO, digest, {
        "answer": cover is not None, "cover": _listed(cover), "size": None if cover is None else len(cover),
    }


def cmd_vcam(args):
    blobs, digest = _read([args.graph, args.matching])
    g = parse_dimacs_graph(blobs[0])
    matching = parse_edge_list(blobs[1])
    if not g.is_matching(matching):
        raise InputError("the edge list is not a matching of the graph")
    res = solve_vc_above_matching(g, matching, args.g, workers=_workers(args))
    if res.answer and (not g.is_vertex_cover(res.cover) or len(res.cover) > len(matching) + args.g):
        raise AssertionError("cover does not verify")
    return YES if res.answer else NO, digest, {
        "answer": res.answer, "cover": _listed(res.cover), "size": None if res.cover is None else len(res.cover),
        "rounds": res.rounds, "frontier_peak": res.frontier_peak,
    }


def cmd_flow(args):
    (blob,), digest = _read([args.file])
    n, arcs, s, t = parse_dimacs_max(blob)
    net, pieces = normalize_capacities(n, arcs, s, t)
    f = max_flow(net) if args.k is None else flow_of_value_k(net, args.k)
    validate_flow(net, f)
    per_arc = [sum(f[i] for i in p) for p in pieces]
    return YES, digest, {"value": flow_value(net, f), "arc_flow": per_arc}


def cmd_partial(args):
    (blob,), digest = _read([args.file])
    wf = parse_wcnf(blob)
    r = solve_partial(wf, args.k, args.param, workers=_workers(args))
    if r.assignment is not None:
        ok, w = count_weighted(r.assignment, wf)
        if not ok or w != r.weight:
            raise AssertionError("assignment does not verify")
    code = {"optimal": YES, "infeasible": NO, "reject": REJECT}[r.status]
    return code, digest, {
        "status": r.status, "weight": r.weight, "assignment": _listed(r.assignment),
        "param_value_used": r.param_value, "decomposition_stats": r.stats,
    }


def cmd_oracle(args):
    (blob,), digest = _read([args.file])
    mode = {"sat": SAT, "nae": NAE, "term": TERM}.get(args.mode) or exact(int(args.mode.split("=")[1]))
    if args.problem == "max":
        f = parse_dimacs_dnf(blob) if args.mode == "term" else parse_dimacs_cnf(blob)
        value, beta = brute_max(f, mode)
    elif args.problem == "min":
        value, beta = brute_min_sat(parse_dimacs_cnf(blob))
    elif args.problem == "almost":
        value, beta = brute_almost(parse_dimacs_cnf(blob), mode), None
    elif args.problem == "weighted":
        value, beta = brute_weighted(parse_wcnf(blob))
    else:
        value, beta = brute_vertex_cover(parse_dimacs_graph(blob))
    return YES, digest, {"query": args.problem, "value": value, "witness": _listed(beta)}


def cmd_bench(args):
    families = args.family or list(harness.FAMILIES)
    rows = [harness.run_family(fam, seed, args.count) for fam in families for seed in args.seed]
    bad = any(r["agree"] != r["count"] for r in rows)
    if not args.timing:
        for r in rows:
            for key in ("p50_ms", "p95_ms", "max_ms"):
                r.pop(key)
    return NO if bad else YES, None, {"rows": rows, "backend": kernels.BACKEND, "all_agree": not bad}


def cmd_selftest(args):
    g = figure_graph()
    figure_ok = (
        brute_vertex_cover(g)[0] == 3
        and not solve_vc_above_matching(g, [(0, 1), (2, 3)], 0).answer
        and solve_vc_above_matching(g, [(0, 1), (2, 3)], 1).answer
    )
    rows = [harness.run_family(fam, args.seed, args.count) for fam in harness.FAMILIES]
    ok = figure_ok and all(r["agree"] == r["count"] for r in rows)
    summary = {r["family"]: f'{r["agree"]}/{r["count"]}' for r in rows}
    return YES if ok else NO, None, {"figure": figure_ok, "families": summary, "seed": args.seed, "passed": ok}


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="pmaxsat", description="Parameterized MaxSAT toolkit")
    p.add_argument("--workers", type=int, default=None, help="engine worker threads (PMAX_WORKERS wins)")
    p.add_argument("--timing", action="store_true", help="include wall-clock fields in the JSON")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, fn, help_text, *specs):
        sp = sub.add_parser(name, help=help_text)
        for flags, kw in specs:
            sp.add_argument(*flags, **kw)
        sp.set_defaults(func=fn)
        return sp

    file_ = (("file",), {})
    k_req = (("--k",), {"type": int, "required": True})
    g_req = (("--g",), {"type": int, "required": True})
    add("maxsat", cmd_maxsat, "at least k satisfied clauses", file_, k_req)
    add("naesat", cmd_naesat, "at least k nae-satisfied clauses", file_, k_req)
    add("exactsat", cmd_exactsat, "at least k clauses with exactly x true literals", file_, k_req,
        (("--x",), {"type": int, "default": 1}))
    add("dnf", cmd_dnf, "at least k satisfied DNF terms", file_, k_req)
    add("abovehalf", cmd_abovehalf, "ceil((m - m_empty)/2) + g satisfied clauses", file_, g_req)
    add("edsataa", cmd_edsataa, "E(f) + g satisfied clauses, all clauses of width d", file_, g_req,
        (("--d",), {"type": int, "default": None}))
    add("almost2sat", cmd_almost2sat, "delete at most k clauses of a 2-CNF to satisfy it", file_, k_req)
    add("almostnae2sat", cmd_almostnae2sat, "delete at most k clauses to nae-satisfy", file_, k_req)
    add("cnf2", cmd_cnf2, "exact max value when every variable occurs at most twice", file_,
        (("--mode",), {"choices": ("sat", "nae"), "default": "sat"}), (("--k",), {"type": int, "default": None}))
    add("minsat", cmd_minsat, "an assignment satisfying at most k clauses", file_, k_req)
    add("almostdnf", cmd_almostdnf, "all but at most k DNF terms satisfied", file_, k_req)
    add("vc", cmd_vc, "vertex cover of size at most k", file_, k_req)
    add("vcam", cmd_vcam, "vertex cover of size at most |M| + g", (("graph",), {}), (("matching",), {}), g_req)
    add("flow", cmd_flow, "maximum flow of a DIMACS max-flow network", file_,
        (("--k",), {"type": int, "default": None}))
    add("partial", cmd_partial, "weighted partial MaxSAT by a structural parameter", file_, k_req,
        (("--param",), {"choices": ("vc", "td", "fvs", "tw"), "required": True}))
    add("oracle", cmd_oracle, "brute-force reference values", file_,
        (("--problem",), {"choices": ("max", "min", "almost", "weighted", "vc"), "required": True}),
        (("--mode",), {"default": "sat", "help": "sat, nae, term or exact=X"}))
    add("bench", cmd_bench, "seeded solver-versus-oracle agreement tables",
        (("--seed",), {"type": int, "action": "append", "default": None}),
        (("--count",), {"type": int, "default": 200}),
        (("--family",), {"action": "append", "choices": tuple(harness.FAMILIES), "default": None}))
    add("selftest", cmd_selftest, "figure checks plus a short run of every family",
        (("--seed",), {"type": int, "default": 0}), (("--count",), {"type": int, "default": 50}))
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "bench" and not args.seed:
            args.seed = [0, 1, 2]
        t0 = time.perf_counter()
        code, digest, out = args.func(args)
    except (InputError, FormulaError, GraphError, FlowError, OracleLimitError, OSError, ValueError) as exc:
        print(f"pmaxsat: error: {exc}", file=sys.stderr)
        return BAD_INPUT
    report = {"problem": args.command, **out}
    if digest is not None:
        report["input_digest"] = digest
    if args.timing:
        report["elapsed"] = round(time.perf_counter() - t0, 6)
    print(json.dumps(report, sort_keys=True))
    return code


if __name__ == "__main__":
    sys.exit(main())
