import pytest

from pmaxsat.flow import Network
from pmaxsat.formula import HARD, NAE, SAT, TERM, CnfFormula, DnfFormula, WeightedCnf
from pmaxsat.graph import Graph
from pmaxsat.oracle import (
    OracleLimitError, brute_almost, brute_halfintegral_vc, brute_max, brute_max_flow, brute_min_sat,
    brute_vertex_cover, brute_weighted,
)
from pmaxsat.vcmatch import hochbaum

triangle = Graph(3, [(0, 1), (1, 2), (0, 2)])


def test_brute_max(example):
    assert brute_max(example, SAT) == (4, (1, 1))
    assert brute_max(CnfFormula(0, [()])) == (0, ())
    assert brute_max(CnfFormula(1, [(1,), (-1,)])) == (1, (0,))


def test_brute_min_sat():
    assert brute_min_sat(CnfFormula(1, [(1,), (-1,)]))[0] == 1
    assert brute_min_sat(CnfFormula(2, [(1, 2)])) == (0, (0, 0))


def test_min_sat_matches_negated_dnf():
    f = CnfFormula(3, [(1, 2), (-1, 3), (2,), (-2, -3), (1, -1)])
    negated = DnfFormula(3, [tuple(-lit for lit in c) for c in f.clauses])
    assert brute_min_sat(f)[0] == f.m - brute_max(negated, TERM)[0]


def test_brute_weighted():
    assert brute_weighted(WeightedCnf(CnfFormula(1, [(1,), (-1,)]), (HARD, HARD))) == (None, None)
    f = CnfFormula(2, [(1,), (-2,), (2,)])
    assert brute_weighted(WeightedCnf(f, (1, 1, 1)))[0] == brute_max(f)[0]
    tri = CnfFormula(3, [(-1, -2), (-2, -3), (-1, -3), (1,), (2,), (3,)])
    assert brute_weighted(WeightedCnf(tri, (HARD,) * 3 + (1,) * 3))[0] == 1


def test_brute_vertex_cover(figure):
    assert brute_vertex_cover(Graph(2, [(0, 1)]))[0] == 1
    assert brute_vertex_cover(figure)[0] == 3
    assert brute_vertex_cover(Graph(4, []))[0] == 0


def test_brute_max_flow(figure):
    assert brute_max_flow(Network(2, [(0, 1)], 0, 1)) == 1
    assert brute_max_flow(hochbaum(figure)) == 5
    assert brute_max_flow(Network(4, [(0, 1), (2, 3)], 0, 3)) == 0


def test_brute_halfintegral(figure):
    assert brute_halfintegral_vc(Graph(2, [(0, 1)])) == 2
    assert brute_halfintegral_vc(figure) == 5
    assert brute_halfintegral_vc(triangle) == 3


def test_brute_almost():
    assert brute_almost(CnfFormula(2, [(1, 2), (-1, 2)])) == 0
    assert brute_almost(CnfFormula(1, [(1,), (-1,)])) == 1
    assert brute_almost(CnfFormula(1, [(1,)]), NAE) == 1


def test_size_limits():
    with pytest.raises(OracleLimitError):
        brute_max(CnfFormula(40, [(1,)]))
