"""Clause multisets, assignments, the four satisfaction modes and DIMACS I/O.

Literals are DIMACS-style signed integers: ``3`` is x3 and ``-3`` is its negation.
Clauses are tuples of literals; duplicates and complementary pairs are kept as given.
Assignments are tuples of 0/1 of length n, position i-1 holding the value of x_i.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Clause = tuple[int, ...]
Assignment = tuple[int, ...]

WORD_MAX = 2**64 - 1


class FormulaError(ValueError):
    pass


class _Hard:
    """Marker for clauses of infinite weight."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "HARD"

    def __reduce__(self):
        return (_Hard, ())


HARD = _Hard()


@dataclass(frozen=True)
class Mode:
    kind: str
    x: int = 0

    def __post_init__(self):
        if self.kind not in ("sat", "nae", "exact", "term"):
            raise ValueError(f"unknown mode {self.kind!r}")
        if self.kind == "exact" and self.x < 0:
            raise ValueError("exact mode needs x >= 0")

    def __str__(self):
        return f"exact({self.x})" if self.kind == "exact" else self.kind


SAT = Mode("sat")
NAE = Mode("nae")
TERM = Mode("term")


def exact(x: int) -> Mode:
    return Mode("exact", x)


def _check_clause(clause: Sequence[int], n: int) -> Clause:
    out = tuple(int(lit) for lit in clause)
    for lit in out:
        if lit == 0 or abs(lit) > n:
            raise FormulaError(f"literal {lit} out of range for n={n}")
    return out


@dataclass(frozen=True)
class CnfFormula:
    n: int
    clauses: tuple[Clause, ...]

    def __init__(self, n: int, clauses: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise FormulaError("negative variable count")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "clauses", tuple(_check_clause(c, n) for c in clauses))

    @property
    def m(self) -> int:
        return len(self.clauses)

    @property
    def m_empty(self) -> int:
        return sum(1 for c in self.clauses if not c)

    def variables(self) -> set[int]:
        return {abs(lit) for c in self.clauses for lit in c}


@dataclass(frozen=True)
class DnfFormula:
    """Disjunction of terms; each term is a conjunction of literals."""

    n: int
    terms: tuple[Clause, ...]

    def __init__(self, n: int, terms: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise FormulaError("negative variable count")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "terms", tuple(_check_clause(t, n) for t in terms))

    @property
    def m(self) -> int:
        return len(self.terms)


Weight = Union[int, _Hard]


@dataclass(frozen=True)
class WeightedCnf:
    base: CnfFormula
    weights: tuple[Weight, ...]

    def __post_init__(self):
        if len(self.weights) != self.base.m:
            raise FormulaError("one weight per clause required")
        for w in self.weights:
            if w is HARD:
                continue
            if not isinstance(w, int) or isinstance(w, bool) or w < 1 or w > WORD_MAX:
                raise FormulaError(f"bad weight {w!r}")
        checked_sum(w for w in self.weights if w is not HARD)

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def clauses(self) -> tuple[Clause, ...]:
        return self.base.clauses

    @property
    def m(self) -> int:
        return self.base.m

    def is_hard(self, i: int) -> bool:
        return self.weights[i] is HARD


def checked_sum(values: Iterable[int]) -> int:
    total = 0
    for v in values:
        total += v
        if total > WORD_MAX:
            raise OverflowError("weight sum exceeds 64 bits")
    return total


def literal_value(beta: Sequence[int], lit: int) -> int:
    v = beta[abs(lit) - 1]
    return v if lit > 0 else 1 - v


def eval_clause(beta: Sequence[int], clause: Sequence[int], mode: Mode = SAT) -> bool:
    true_count = sum(literal_value(beta, lit) for lit in clause)
    kind = mode.kind
    if kind == "sat":
        return true_count >= 1
    if kind == "nae":
        return 1 <= true_count < len(clause)
    if kind == "term":
        return true_count == len(clause)
    return true_count == mode.x


def count_satisfied(beta: Sequence[int], f: CnfFormula | DnfFormula, mode: Mode | None = None) -> int:
    if isinstance(f, DnfFormula):
        return sum(eval_clause(beta, t, mode or TERM) for t in f.terms)
    return sum(eval_clause(beta, c, mode or SAT) for c in f.clauses)


def count_weighted(beta: Sequence[int], wf: WeightedCnf) -> tuple[bool, int]:
    """Return (every hard clause satisfied, total weight of satisfied soft clauses)."""
    hard_ok = True
    soft = []
    for clause, w in zip(wf.clauses, wf.weights):
        ok = eval_clause(beta, clause, SAT)
        if w is HARD:
            hard_ok = hard_ok and ok
        elif ok:
            soft.append(w)
    return hard_ok, checked_sum(soft)


def expected_satisfied(f: CnfFormula) -> Fraction:
    """Sum over clauses of 1 - 2^-r, r the number of distinct literals.

    This is the mean satisfied count under a uniform random assignment as long
    as no clause contains a complementary pair (a tautology counts 1 - 2^-r, not 1).
    """
    return sum((1 - Fraction(1, 2 ** len(set(c))) for c in f.clauses), Fraction(0))


def guaranteed_half(f: CnfFormula) -> int:
    return (f.m - f.m_empty + 1) // 2


def complement(beta: Sequence[int]) -> Assignment:
    return tuple(1 - b for b in beta)


def _text(data: str | bytes) -> str:
    return data.decode() if isinstance(data, (bytes, bytearray)) else data


def _ints(tokens: Sequence[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise FormulaError(f"line {lineno}: non-integer token") from None


def parse_dimacs_cnf(data: str | bytes, kind: str = "cnf") -> CnfFormula:
    """Parse DIMACS CNF. Clauses may span lines; each ends with a 0."""
    n = declared = None
    clauses: list[list[int]] = []
    current: list[int] = []
    for lineno, line in enumerate(_text(data).splitlines(), 1):
        tokens = line.split()
        if not tokens or tokens[0] == "c" or tokens[0].startswith("%"):
            continue
        if tokens[0] == "p":
            if n is not None or len(tokens) != 4 or tokens[1] != kind:
                raise FormulaError(f"line {lineno}: malformed header")
            n, declared = _ints(tokens[2:], lineno)
            if n < 0 or declared < 0:
                raise FormulaError(f"line {lineno}: malformed header")
            continue
        if n is None:
            raise FormulaError(f"line {lineno}: clause before header")
        for lit in _ints(tokens, lineno):
            if lit == 0:
                clauses.append(current)
                current = []
            elif abs(lit) > n:
                raise FormulaError(f"line {lineno}: literal {lit} exceeds n={n}")
            else:
                current.append(lit)
    if n is None:
        raise FormulaError("missing header")
    if current:
        raise FormulaError("last clause is missing its terminating 0")
    if len(clauses) != declared:
        raise FormulaError(f"header declares {declared} clauses, found {len(clauses)}")
    return CnfFormula(n, clauses)


def parse_dimacs_dnf(data: str | bytes) -> DnfFormula:
    """Terms in DIMACS layout, header "p dnf n m" (a "p cnf" header is accepted too)."""
    text = _text(data)
    kind = "cnf"
    for line in text.splitlines():
        tokens = line.split()
        if tokens and tokens[0] == "p" and len(tokens) > 1:
            kind = tokens[1] if tokens[1] in ("cnf", "dnf") else kind
            break
    f = parse_dimacs_cnf(text, kind)
    return DnfFormula(f.n, f.clauses)


def parse_wcnf(data: str | bytes) -> WeightedCnf:
    """Parse the 2022 WCNF layout: "h lits 0" for hard clauses, "w lits 0" for soft ones."""
    clauses: list[list[int]] = []
    weights: list[Weight] = []
    for lineno, line in enumerate(_text(data).splitlines(), 1):
        tokens = line.split()
        if not tokens or tokens[0] == "c":
            continue
        if tokens[0] == "p":
            raise FormulaError(f"line {lineno}: 'p' headers are not part of the 2022 format")
        if tokens[0] == "h":
            weight: Weight = HARD
        else:
            try:
                weight = int(tokens[0])
            except ValueError:
                raise FormulaError(f"line {lineno}: bad weight {tokens[0]!r}") from None
            if weight <= 0 or weight > WORD_MAX:
                raise FormulaError(f"line {lineno}: weight must be in 1..2^64-1")
        lits = _ints(tokens[1:], lineno)
        if not lits or lits[-1] != 0 or 0 in lits[:-1]:
            raise FormulaError(f"line {lineno}: clause must end with a single 0")
        clauses.append(lits[:-1])
        weights.append(weight)
    n = max((abs(lit) for c in clauses for lit in c), default=0)
    return WeightedCnf(CnfFormula(n, clauses), tuple(weights))


def to_dimacs(f: CnfFormula | DnfFormula) -> str:
    kind = "dnf" if isinstance(f, DnfFormula) else "cnf"
    rows = f.terms if isinstance(f, DnfFormula) else f.clauses
    lines = [f"p {kind} {f.n} {len(rows)}"]
    lines += [" ".join([*map(str, c), "0"]) for c in rows]
    return "\n".join(lines) + "\n"


def to_wcnf(wf: WeightedCnf) -> str:
    lines = []
    for clause, w in zip(wf.clauses, wf.weights):
        head = "h" if w is HARD else str(w)
        lines.append(" ".join([head, *map(str, clause), "0"]))
    return "".join(line + "\n" for line in lines)
