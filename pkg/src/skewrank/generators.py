"""Seeded random matrices for tests and benchmarks."""

from __future__ import annotations

import random

from .field import FieldSpec
from .matrix import Matrix

SIGNS = (1, -1)


def uniform_sign_matrix(n: int, rng: random.Random, field: FieldSpec) -> Matrix:
    """Entries drawn uniformly from {0, 1, -1}."""
    return Matrix([[rng.choice((0, 1, -1)) for _ in range(n)] for _ in range(n)], field)


def symmetric_support_matrix(n: int, rng: random.Random, field: FieldSpec,
                             density: float | None = None) -> Matrix:
    """Zero diagonal, symmetric support, independent random signs on each entry."""
    if density is None:
        density = rng.random()
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < density:
                rows[i][j] = rng.choice(SIGNS)
                rows[j][i] = rng.choice(SIGNS)
    return Matrix(rows, field)


def random_skew_matrix(n: int, rng: random.Random, field: FieldSpec, entries=None) -> Matrix:
    """Antisymmetrized random strictly-upper part with zero diagonal."""
    choose = (lambda: rng.choice(entries)) if entries else (lambda: rng.randint(-5, 5))
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            x = choose()
            rows[i][j] = x
            rows[j][i] = -x
    return Matrix(rows, field)


def sign_scaled_skew_matrix(n: int, rng: random.Random, field: FieldSpec) -> Matrix:
    """A random {0, 1, -1} skew matrix with rows and columns flipped at random."""
    skew = random_skew_matrix(n, rng, field, entries=(0, 0, 1, -1))
    d = [rng.choice(SIGNS) for _ in range(n)]
    e = [rng.choice(SIGNS) for _ in range(n)]
    return Matrix([[d[i] * x * e[j] for j, x in enumerate(row)]
                   for i, row in enumerate(skew.tolist())], field)


def mixed_sign_matrix(n: int, rng: random.Random, field: FieldSpec) -> Matrix:
    """One of the three families above, chosen uniformly.

    Uniform {0, 1, -1} matrices nearly always have a nonzero diagonal entry,
    so the mix keeps the interesting (zero-diagonal, symmetric-support) cases
    frequent.
    """
    kind = rng.randrange(3)
    if kind == 0:
        return uniform_sign_matrix(n, rng, field)
    if kind == 1:
        return symmetric_support_matrix(n, rng, field)
    return sign_scaled_skew_matrix(n, rng, field)
