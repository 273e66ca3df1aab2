"""Brute-force oracle: does every principal submatrix have even rank?"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import kernels
from .errors import DimensionMismatch, TooLarge
from .matrix import Matrix, check_index_set, kernel_grid, principal_submatrix, rank

DEFAULT_MAX_N = 24


@dataclass(frozen=True)
class OddWitness:
    """1-based index set whose principal submatrix has odd rank."""

    indices: tuple[int, ...]
    observed_rank: int

    def to_dict(self):
        return {"indices": list(self.indices), "rank": self.observed_rank}


@dataclass(frozen=True)
class EvenRankVerdict:
    witness: OddWitness | None
    mode: str  # "exhaustive" or "sampled"
    trials: int | None = None
    seed: int | None = None

    @property
    def all_even(self) -> bool:
        return self.witness is None


def check_all_principal_even(
    m: Matrix,
    sample: int | None = None,
    seed: int = 0,
    max_n: int = DEFAULT_MAX_N,
) -> EvenRankVerdict:
    """Search the principal submatrices of ``m`` for one of odd rank.

    Exhaustive mode (``sample=None``) visits index sets by increasing size and
    lexicographically within a size, so the reported witness is the first odd
    one in that order.  With ``sample=N`` it instead checks ``N`` uniformly
    random nonempty subsets drawn from ``random.Random(seed)``.
    """
    if not m.is_square:
        raise DimensionMismatch("principal submatrices need a square matrix")
    n = m.nrows
    grid, p = kernel_grid(m)
    if sample is None:
        if n > max_n:
            raise TooLarge(f"exhaustive check of n={n} exceeds max_n={max_n}; sample instead")
        hit = kernels.first_odd_principal(grid, p)
        witness = None
        if hit is not None:
            idx, r = hit
            witness = OddWitness(tuple(i + 1 for i in idx), r)
        return EvenRankVerdict(witness, "exhaustive")

    rng = random.Random(seed)
    witness = None
    if n:
        for _ in range(sample):
            mask = 0
            while not mask:
                mask = rng.getrandbits(n)
            idx = [i for i in range(n) if mask >> i & 1]
            r = kernels.principal_rank(grid, p, idx)
            if r & 1:
                witness = OddWitness(tuple(i + 1 for i in idx), r)
                break
    return EvenRankVerdict(witness, "sampled", sample, seed)


def verify_witness(m: Matrix, w: OddWitness) -> bool:
    """Re-check that ``w`` names a principal submatrix of the stated odd rank."""
    idx = check_index_set(w.indices, m.nrows)
    if not idx:
        return False
    r = rank(principal_submatrix(m, idx))
    return r == w.observed_rank and r % 2 == 1
