"""Row-covering generalized binomial coefficients of a partition.

``gen_binom(lam, r)`` counts the r-subsets of the Ferrers diagram of
``lam`` that contain at least one cell in every row.  The fast path
multiplies out ``prod_i ((1+t)^{lam_i} - 1)`` one row at a time; the
coefficient of t^r is the answer.  A literal subset-counting oracle is
kept alongside for validation.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Tuple

from .partitions import Partition

#: default cap on |lambda| for the brute-force oracle
DEFAULT_ORACLE_LIMIT = 16


@lru_cache(maxsize=None)
def _row_coeffs(parts: Tuple[int, ...]) -> Tuple[int, ...]:
    acc = [1]
    for a in parts:
        row = [0] + [comb(a, k) for k in range(1, a + 1)]  # (1+t)^a - 1
        out = [0] * (len(acc) + a)
        for i, x in enumerate(acc):
            if x == 0:
                continue
            for j, y in enumerate(row):
                out[i + j] += x * y
        acc = out
    return tuple(acc)


def row_gen_poly(lam: Partition) -> Tuple[int, ...]:
    """Coefficient vector (⟨λ,0⟩, ⟨λ,1⟩, ..., ⟨λ,|λ|⟩)."""
    return _row_coeffs(lam.parts)


def gen_binom(lam: Partition, r: int) -> int:
    """Number of r-subsets of the diagram covering every row; 0 out of range."""
    if r < 0:
        raise ValueError("r must be non-negative")
    coeffs = row_gen_poly(lam)
    if r >= len(coeffs):
        return 0
    return coeffs[r]


def gen_binom_bruteforce(
    lam: Partition, r: int, oracle_limit: int = DEFAULT_ORACLE_LIMIT
) -> int:
    """Literal count over all r-subsets of cells; guarded against blowup."""
    if r < 0:
        raise ValueError("r must be non-negative")
    if lam.weight > oracle_limit:
        raise ValueError(
            f"|lambda| = {lam.weight} exceeds oracle limit {oracle_limit}"
        )
    cells = list(lam.cells())
    rows = set(range(1, lam.length + 1))
    count = 0
    for subset in combinations(cells, r):
        if {i for i, _ in subset} == rows:
            count += 1
    return count
