import random
from itertools import product

from hypothesis import given, settings, strategies as st

from pmaxsat.dual2sat import (
    reduce_2sat_to_vardel, reduce_nae_to_2sat, reduce_vardel_to_vcam, solve_almost_2sat, solve_almost_nae_2sat,
)
from pmaxsat.formula import NAE, SAT, CnfFormula, eval_clause
from pmaxsat.harness import random_cnf
from pmaxsat.oracle import brute_almost, brute_vertex_cover


def test_nae_pairs():
    assert reduce_nae_to_2sat(CnfFormula(2, [(1, 2)]), 0)[0].clauses == ((1, 2), (-1, -2))
    assert reduce_nae_to_2sat(CnfFormula(0, []), 0)[0].m == 0
    assert reduce_nae_to_2sat(CnfFormula(1, [(1,)]), 0)[0].clauses == ((1,), (-1,))


@settings(max_examples=200)
@given(st.integers(0, 2**32))
def test_nae_pair_behaviour(seed):
    rng = random.Random(seed)
    f = random_cnf(rng, rng.randint(1, 4), rng.randint(1, 5), 1, 2)
    psi, _, trace = reduce_nae_to_2sat(f, 0)
    for beta in product((0, 1), repeat=f.n):
        for i, c in enumerate(f.clauses):
            pair = [eval_clause(beta, psi.clauses[j], SAT) for j, s in enumerate(trace.source) if s == i]
            expected = 2 if eval_clause(beta, c, NAE) else 1
            assert sum(pair) == expected


def test_vardel_copies_single_clause():
    g, k, trace = reduce_2sat_to_vardel(CnfFormula(2, [(1, 2)]), 0)
    assert g.clauses == ((1, 2),) and trace.copy_of == [(1, 0), (2, 0)]


def test_vardel_complementary_units():
    g, k, trace = reduce_2sat_to_vardel(CnfFormula(1, [(1,), (-1,)]), 1)
    assert g.clauses == ((1,), (-2,), (-1, 2), (1, -2))
    assert k == 1 and trace.clause_of == [0, 1, None, None]


def test_vardel_equalities_per_unordered_pair():
    f = CnfFormula(1, [(1,), (1,), (-1,)])
    g, _, _ = reduce_2sat_to_vardel(f, 0)
    assert g.n == 3 and g.m == 3 + 2 * 3


def test_empty_clauses_spend_budget():
    _, k, trace = reduce_2sat_to_vardel(CnfFormula(1, [(), (1,)]), 2)
    assert k == 1 and trace.empty == [0]


def test_unit_clause_gets_pendant():
    g, matching, k, trace = reduce_vardel_to_vcam(CnfFormula(1, [(1,)]), 0)
    assert g.edges == ((0, 1), (0, 2)) and matching == [(0, 1)]
    assert brute_vertex_cover(g)[0] == 1


def _chain_value(f):
    vf, vk, _ = reduce_2sat_to_vardel(f, 0)
    g, _, _, _ = reduce_vardel_to_vcam(vf, 0)
    return brute_vertex_cover(g)[0] - vf.n - vk


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 2**32))
def test_chain_preserves_deletions(seed):
    rng = random.Random(seed)
    f = random_cnf(rng, rng.randint(1, 4), rng.randint(0, 4), 0, 2)
    assert _chain_value(f) == brute_almost(f)


def test_satisfiable_2cnf_has_cover_of_size_n():
    vf, _, _ = reduce_2sat_to_vardel(CnfFormula(2, [(1, 2), (-1, 2)]), 0)
    g, *_ = reduce_vardel_to_vcam(vf, 0)
    assert brute_vertex_cover(g)[0] == vf.n


def test_almost_2sat_examples():
    ok = solve_almost_2sat(CnfFormula(2, [(1, 2), (-1, 2)]), 0)
    assert ok.answer and ok.deleted == ()
    one = solve_almost_2sat(CnfFormula(1, [(1,), (-1,)]), 1)
    assert one.answer and len(one.deleted) == 1
    assert not solve_almost_2sat(CnfFormula(1, [(1,), (-1,)]), 0).answer


def test_almost_nae_examples():
    assert solve_almost_nae_2sat(CnfFormula(2, [(1, 2)]), 0).answer
    assert not solve_almost_nae_2sat(CnfFormula(1, [(1,)]), 0).answer
    assert solve_almost_nae_2sat(CnfFormula(1, [(1,)]), 1).deleted == (0,)


@settings(max_examples=300, deadline=None)
@given(st.integers(0, 2**32), st.integers(0, 4), st.booleans())
def test_almost_matches_oracle(seed, k, nae):
    rng = random.Random(seed)
    f = random_cnf(rng, rng.randint(1, 7), rng.randint(0, 9), 0 if rng.random() < 0.1 else 1, 2)
    mode = NAE if nae else SAT
    res = (solve_almost_nae_2sat if nae else solve_almost_2sat)(f, k)
    assert res.answer == (brute_almost(f, mode) <= k)
    if res.answer:
        drop = set(res.deleted)
        assert len(drop) <= k
        assert all(eval_clause(res.assignment, c, mode) for i, c in enumerate(f.clauses) if i not in drop)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32), st.integers(0, 3))
def test_almost_ignores_worker_count(seed, k):
    rng = random.Random(seed)
    f = random_cnf(rng, rng.randint(1, 6), rng.randint(0, 8), 1, 2)
    assert solve_almost_2sat(f, k, workers=1) == solve_almost_2sat(f, k, workers=3)
