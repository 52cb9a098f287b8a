"""Solvers parameterized by the excess over a guaranteed number of satisfied clauses."""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .colorcoding import MAX_FAMILY, hash_family_size, solve_max_k
from .formula import SAT, CnfFormula, FormulaError, count_satisfied, guaranteed_half

MAX_POLY_VARS = 26


@dataclass(frozen=True)
class Decided:
    answer: bool


@dataclass(frozen=True)
class Residual:
    formula: CnfFormula
    target: int
    removed_pairs: int


def reduce_above_half(f: CnfFormula, g: int) -> Decided | Residual:
    if g < 1:
        raise ValueError("the reduction needs g >= 1")
    clauses = [c for c in f.clauses if c]
    pos, neg = Counter(), Counter()
    for c in clauses:
        if len(c) == 1:
            (pos if c[0] > 0 else neg)[abs(c[0])] += 1
    cancel = {v: min(pos[v], neg[v]) for v in pos if neg[v]}
    pairs = sum(cancel.values())
    budget = Counter()
    for v, count in cancel.items():
        budget[v] = budget[-v] = count
    kept = []
    for c in clauses:
        if len(c) == 1 and budget[c[0]] > 0:
            budget[c[0]] -= 1
            continue
        kept.append(c)
    m = len(kept)
    units = sum(1 for c in kept if len(c) == 1)
    if units >= (m + 1) // 2 + g or m - units >= 4 * g + 4:
        return Decided(True)
    assert m // 2 <= 5 * g + 2
    return Residual(CnfFormula(f.n, kept), (m + 1) // 2 + g, pairs)


def _unit_assignment(f: CnfFormula, fill: int) -> list[int]:
    beta = [fill] * f.n
    for c in f.clauses:
        if len(c) == 1:
            beta[abs(c[0]) - 1] = 1 if c[0] > 0 else 0
    return beta


def conditional_expectation(f: CnfFormula) -> tuple[int, ...]:
    """Fix variables in order, each time keeping the expected satisfied count from dropping."""
    beta: list[int | None] = [None] * f.n

    def expected():
        total = 0.0
        for c in f.clauses:
            free, sat = 0, False
            for lit in c:
                v = beta[abs(lit) - 1]
                if v is None:
                    free += 1
                elif (v == 1) == (lit > 0):
                    sat = True
            total += 1.0 if sat else (1 - 0.5**free if free else 0.0)
        return total

    for i in range(f.n):
        beta[i] = 0
        low = expected()
        beta[i] = 1
        if expected() < low:
            beta[i] = 0
    return tuple(beta)


def _local_search(f: CnfFormula, beta, max_flips: int) -> tuple[int, ...]:
    beta = list(beta)
    score = count_satisfied(beta, f)
    for _ in range(max_flips):
        best_gain, best_var = 0, None
        for i in range(f.n):
            beta[i] ^= 1
            gain = count_satisfied(beta, f) - score
            beta[i] ^= 1
            if gain > best_gain:
                best_gain, best_var = gain, i
        if best_var is None:
            break
        beta[best_var] ^= 1
        score += best_gain
    return tuple(beta)


def _rule3_witness(f: CnfFormula, target: int):
    seeds = [_unit_assignment(f, 0), _unit_assignment(f, 1), conditional_expectation(f)]
    for seed in seeds:
        for cand in (tuple(seed), _local_search(f, seed, 4 * f.n + 4)):
            if count_satisfied(cand, f) >= target:
                return cand
    width = min(target, f.n)
    if min(2**f.n, hash_family_size(f.n, width, 2)) <= MAX_FAMILY:
        ok, witness = solve_max_k(f, target, SAT)
        if ok:
            return witness
    return None


def solve_above_half(f: CnfFormula, g: int):
    """Decide whether some assignment satisfies ceil((m - m_empty)/2) + g clauses.

    Returns (answer, witness, meta). ``meta["route"]`` names the deciding rule and
    ``meta["witness"]`` is "verified" or "none" (a yes from the non-unit count
    rule has no constructive proof behind it, so its witness is searched for).
    """
    if g < 0:
        raise ValueError("g must be non-negative")
    target = guaranteed_half(f) + g
    if g == 0:
        beta = (0,) * f.n
        if count_satisfied(beta, f) < target:
            beta = (1,) * f.n
        assert count_satisfied(beta, f) >= target
        return True, beta, {"route": "guarantee", "witness": "verified"}
    red = reduce_above_half(f, g)
    if isinstance(red, Decided):
        witness = _rule3_witness(f, target)
        if witness is not None:
            assert count_satisfied(witness, f) >= target
        return True, witness, {"route": "rule3", "witness": "verified" if witness else "none"}
    ok, witness = solve_max_k(red.formula, red.target, SAT)
    if ok:
        assert count_satisfied(witness, f) >= target
        return True, witness, {"route": "residual", "witness": "verified"}
    return False, None, {"route": "residual", "witness": "none"}


@dataclass(frozen=True)
class Monomial:
    coefficient: int
    vars: tuple[int, ...]


def _check_width(f: CnfFormula, d: int):
    for c in f.clauses:
        if len(c) != d:
            raise FormulaError(f"clause {c} does not have width {d}")
        if len({abs(lit) for lit in c}) != d:
            raise FormulaError(f"clause {c} repeats a variable")


def expand_polynomial(f: CnfFormula, d: int) -> list[Monomial]:
    """Expand sum over clauses of 1 - prod(1 + s_j x_j), s_j = -1 for a positive literal.

    Over +-1 variables (true = +1) this equals 2^d (satisfied - expected satisfied).
    """
    _check_width(f, d)
    coeffs: dict[tuple[int, ...], int] = defaultdict(int)
    for c in f.clauses:
        signed = sorted((abs(lit), -1 if lit > 0 else 1) for lit in c)
        for size in range(1, d + 1):
            for subset in combinations(signed, size):
                sign = 1
                for _, s in subset:
                    sign *= s
                coeffs[tuple(v for v, _ in subset)] -= sign
    return [Monomial(cf, vs) for vs, cf in sorted(coeffs.items(), key=lambda kv: (len(kv[0]), kv[0])) if cf]


def evaluate_polynomial(monomials: list[Monomial], point) -> int:
    """Value at a +-1 point given as a 0/1 assignment (1 means +1)."""
    total = 0
    for mono in monomials:
        prod = mono.coefficient
        for v in mono.vars:
            prod *= 1 if point[v - 1] else -1
        total += prod
    return total


def monomial_bound(d: int, g: int) -> int:
    return 4 * 9**d * 4**d * g * g


def solve_edsat_aa(f: CnfFormula, g: int, d: int):
    """Decide whether some assignment satisfies at least E(f) + g clauses (all clauses of width d).

    Returns (answer, witness); the witness is None when the monomial rule decides.
    """
    if g < 0:
        raise ValueError("g must be non-negative")
    monomials = expand_polynomial(f, d)
    if g == 0:
        return True, conditional_expectation(f)
    if len(monomials) >= monomial_bound(d, g):
        return True, None
    names = sorted({v for mono in monomials for v in mono.vars})
    if len(names) > MAX_POLY_VARS:
        raise ValueError(f"{len(names)} polynomial variables exceed the brute-force guard")
    col = {v: j for j, v in enumerate(names)}
    threshold = g * 2**d
    k = len(names)
    rows = np.arange(1 << k, dtype=np.int64)
    step = 1 << 16
    for start in range(0, len(rows), step):
        chunk = rows[start:start + step]
        signs = 2 * ((chunk[:, None] >> np.arange(k - 1, -1, -1)) & 1) - 1
        value = np.zeros(len(chunk), dtype=np.int64)
        for mono in monomials:
            term = np.full(len(chunk), mono.coefficient, dtype=np.int64)
            for v in mono.vars:
                term *= signs[:, col[v]]
            value += term
        hits = np.flatnonzero(value >= threshold)
        if len(hits):
            row = int(chunk[hits[0]])
            beta = [0] * f.n
            for j, v in enumerate(names):
                beta[v - 1] = (row >> (k - 1 - j)) & 1
            return True, tuple(beta)
    return False, None
