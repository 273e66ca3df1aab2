"""Pure-Python kernels.  Same API as the compiled ``_kernels`` extension.

Matrices are lists of integer rows.  ``p > 0`` means entries are residues
modulo the prime ``p``; ``p == 0`` means the entries are ordinary integers
and the rank is taken over the rationals (fraction-free elimination).
"""

from itertools import combinations


def _rank_modp(a, p):
    n = len(a)
    m = len(a[0]) if n else 0
    r = 0
    for c in range(m):
        if r == n:
            break
        piv = next((i for i in range(r, n) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        pivot_row = a[r]
        inv = pow(pivot_row[c], -1, p)
        for i in range(r + 1, n):
            row = a[i]
            g = row[c]
            if g:
                f = g * inv % p
                for j in range(c, m):
                    row[j] = (row[j] - f * pivot_row[j]) % p
        r += 1
    return r


def _rank_bareiss(a):
    n = len(a)
    m = len(a[0]) if n else 0
    r = 0
    prev = 1
    for c in range(m):
        if r == n:
            break
        piv = next((i for i in range(r, n) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        pivot_row = a[r]
        f = pivot_row[c]
        for i in range(r + 1, n):
            row = a[i]
            g = row[c]
            for j in range(c + 1, m):
                row[j] = (f * row[j] - g * pivot_row[j]) // prev
            row[c] = 0
        prev = f
        r += 1
    return r


def rank(grid, p):
    a = [list(row) for row in grid]
    return _rank_modp(a, p) if p else _rank_bareiss(a)


def principal_rank(grid, p, indices):
    sub = [[grid[i][j] for j in indices] for i in indices]
    return _rank_modp(sub, p) if p else _rank_bareiss(sub)


def first_odd_principal(grid, p):
    """First index set (by size, then lexicographic) with odd principal rank.

    Returns ``(indices, rank)`` with 0-based indices, or ``None``.
    """
    n = len(grid)
    for k in range(1, n + 1):
        for idx in combinations(range(n), k):
            r = principal_rank(grid, p, idx)
            if r & 1:
                return idx, r
    return None
