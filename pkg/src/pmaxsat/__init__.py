"""Parameterized MaxSAT toolkit: exact solvers checked against brute-force oracles."""

from .formula import (
    HARD, NAE, SAT, TERM, CnfFormula, DnfFormula, FormulaError, Mode, WeightedCnf, count_satisfied,
    count_weighted, eval_clause, exact, parse_dimacs_cnf, parse_dimacs_dnf, parse_wcnf,
)
from .graph import Graph
from .kernels import BACKEND

__all__ = [
    "HARD", "NAE", "SAT", "TERM", "CnfFormula", "DnfFormula", "FormulaError", "Mode", "WeightedCnf",
    "count_satisfied", "count_weighted", "eval_clause", "exact", "parse_dimacs_cnf", "parse_dimacs_dnf",
    "parse_wcnf", "Graph", "BACKEND",
]
