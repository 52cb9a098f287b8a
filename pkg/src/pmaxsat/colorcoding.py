"""Universal coloring families and the color-coding max-k solver."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product

import numpy as np

from . import kernels
from .formula import SAT, TERM, CnfFormula, DnfFormula, Mode

# Families above this many functions are refused rather than materialised.
MAX_FAMILY = 1 << 22


@dataclass(frozen=True)
class ColoringFamily:
    """Function tables {1..n} -> {1..c}, stored as an int8 array of shape (size, n)."""

    n: int
    k: int
    c: int
    tables: np.ndarray

    def __len__(self):
        return self.tables.shape[0]

    @property
    def functions(self) -> list[tuple[int, ...]]:
        return [tuple(int(v) for v in row) for row in self.tables]


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, int(p**0.5) + 1))


def _next_prime(n: int) -> int:
    p = max(n, 2)
    while not _is_prime(p):
        p += 1
    return p


def _all_functions(n: int, c: int) -> np.ndarray:
    if c**n > MAX_FAMILY:
        raise ValueError(f"exhaustive family {c}^{n} is too large")
    digits = np.arange(c**n, dtype=np.int64)
    out = np.zeros((c**n, n), dtype=np.int8)
    for pos in range(n - 1, -1, -1):
        out[:, pos] = digits % c + 1
        digits //= c
    return out


def hash_family_size(n: int, k: int, c: int) -> int:
    """Upper bound on the size of the hash-composed family before deduplication."""
    return (_next_prime(n + 1) - 1) * c ** (k * k)


@lru_cache(maxsize=128)
def universal_coloring_family(n: int, k: int, c: int, force_hash: bool = False) -> ColoringFamily:
    """An (n, k, c)-universal family, sorted lexicographically and free of duplicates.

    Buckets come from i -> ((a*i) mod p) mod k^2 with p the least prime above n.
    For each fixed k-subset the number of colliding pairs, summed over all a in
    1..p-1, stays below p-1, so some multiplier is injective on it; composing
    every multiplier with every coloring of the k^2 buckets is then universal.
    When c^n is no larger, the exhaustive family is returned instead. Results
    are cached, so the tables are read-only.
    """
    if not 0 <= k <= n or c < 1:
        raise ValueError("need 0 <= k <= n and c >= 1")
    if k == 0:
        tables = np.ones((1, n), dtype=np.int8)
    elif not force_hash and (k == n or c**n <= hash_family_size(n, k, c)):
        tables = _all_functions(n, c)
    else:
        buckets = k * k
        if hash_family_size(n, k, c) > MAX_FAMILY:
            raise ValueError("hash-composed family is too large")
        p = _next_prime(n + 1)
        colorings = _all_functions(buckets, c)
        points = np.arange(1, n + 1, dtype=np.int64)
        blocks = [colorings[:, (a * points) % p % buckets] for a in range(1, p)]
        tables = np.unique(np.concatenate(blocks), axis=0)
    tables.flags.writeable = False
    return ColoringFamily(n, k, c, tables)


def verify_universal(fam: ColoringFamily) -> bool:
    """Check every (k-subset, coloring) pattern is hit by some table."""
    tables = fam.tables
    if fam.k == 0:
        return len(tables) > 0
    weights = fam.c ** np.arange(fam.k, dtype=np.int64)
    for subset in combinations(range(fam.n), fam.k):
        codes = ((tables[:, list(subset)].astype(np.int64) - 1) * weights).sum(axis=1)
        if len(np.unique(codes)) < fam.c**fam.k:
            return False
    return True


def robustness(rows, mode: Mode) -> int:
    """How many variables must be fixed to keep one satisfied clause satisfied."""
    if mode.kind == "sat":
        return 1
    if mode.kind == "nae":
        return 2
    return max((len(r) for r in rows), default=0)


def solve_max_k(f: CnfFormula | DnfFormula, k: int, mode: Mode | None = None):
    """Decide whether some assignment satisfies at least k clauses (terms) in ``mode``.

    Returns (answer, witness); the witness is the assignment from the
    lexicographically least accepting coloring.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    if isinstance(f, DnfFormula):
        rows, mode = f.terms, mode or TERM
    else:
        rows, mode = f.clauses, mode or SAT
    if k > len(rows):
        return False, None
    width = min(robustness(rows, mode) * k, f.n)
    fam = universal_coloring_family(f.n, width, 2)
    table = fam.tables - 1
    if k == 0:
        return True, tuple(int(v) for v in table[0])
    idx = kernels.first_reaching(table, rows, mode, k)
    if idx < 0:
        return False, None
    return True, tuple(int(v) for v in table[idx])
