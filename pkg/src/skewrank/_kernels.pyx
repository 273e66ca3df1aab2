# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: exact rank mod p / over Z, and principal-subset scans.

Mirrors ``_kernels_py``.  For ``p == 0`` the caller guarantees that every
minor fits in a signed 64-bit integer; products of two minors are formed in
128-bit arithmetic.
"""

from libc.stdlib cimport malloc, free

ctypedef long long i64

cdef extern from *:
    ctypedef long long i128 "__int128"


cdef int _rank_modp(i64* a, int n, int m, i64 p) noexcept nogil:
    cdef int r = 0, c, i, j, piv
    cdef i64 f, g, t
    for c in range(m):
        if r == n:
            break
        piv = -1
        for i in range(r, n):
            if a[i * m + c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(m):
                t = a[r * m + j]
                a[r * m + j] = a[piv * m + j]
                a[piv * m + j] = t
        f = a[r * m + c]
        for i in range(r + 1, n):
            g = a[i * m + c]
            if g != 0:
                for j in range(c, m):
                    t = (f * a[i * m + j] - g * a[r * m + j]) % p
                    if t < 0:
                        t += p
                    a[i * m + j] = t
        r += 1
    return r


cdef int _rank_bareiss(i64* a, int n, int m) noexcept nogil:
    cdef int r = 0, c, i, j, piv
    cdef i64 f, g, t, prev = 1
    for c in range(m):
        if r == n:
            break
        piv = -1
        for i in range(r, n):
            if a[i * m + c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(m):
                t = a[r * m + j]
                a[r * m + j] = a[piv * m + j]
                a[piv * m + j] = t
        f = a[r * m + c]
        for i in range(r + 1, n):
            g = a[i * m + c]
            for j in range(c + 1, m):
                a[i * m + j] = <i64> ((<i128> f * a[i * m + j] - <i128> g * a[r * m + j]) / prev)
            a[i * m + c] = 0
        prev = f
        r += 1
    return r


cdef inline int _rank(i64* a, int n, int m, i64 p) noexcept nogil:
    if p:
        return _rank_modp(a, n, m, p)
    return _rank_bareiss(a, n, m)


cdef i64* _load(grid, int n, int m) except NULL:
    cdef i64* buf = <i64*> malloc(max(n * m, 1) * sizeof(i64))
    if buf == NULL:
        raise MemoryError()
    cdef int i, j
    for i in range(n):
        row = grid[i]
        for j in range(m):
            buf[i * m + j] = row[j]
    return buf


def rank(grid, long long p):
    cdef int n = len(grid)
    cdef int m = len(grid[0]) if n else 0
    if n == 0 or m == 0:
        return 0
    cdef i64* a = _load(grid, n, m)
    cdef int r
    try:
        r = _rank(a, n, m, p)
    finally:
        free(a)
    return r


def principal_rank(grid, long long p, indices):
    cdef int n = len(grid)
    cdef int k = len(indices)
    if k == 0:
        return 0
    cdef i64* full = _load(grid, n, n)
    cdef i64* sub = <i64*> malloc(k * k * sizeof(i64))
    cdef int i, j, r
    try:
        for i in range(k):
            for j in range(k):
                sub[i * k + j] = full[<int> indices[i] * n + <int> indices[j]]
        r = _rank(sub, k, k, p)
    finally:
        free(full)
        free(sub)
    return r


def first_odd_principal(grid, long long p):
    """First index set (by size, then lexicographic) with odd principal rank.

    Returns ``(indices, rank)`` with 0-based indices, or ``None``.
    """
    cdef int n = len(grid)
    if n == 0:
        return None
    cdef i64* full = _load(grid, n, n)
    cdef i64* sub = <i64*> malloc(n * n * sizeof(i64))
    cdef int* idx = <int*> malloc(n * sizeof(int))
    cdef int k, i, j, r = 0, found = 0
    try:
        with nogil:
            for k in range(1, n + 1):
                for i in range(k):
                    idx[i] = i
                while True:
                    for i in range(k):
                        for j in range(k):
                            sub[i * k + j] = full[idx[i] * n + idx[j]]
                    r = _rank(sub, k, k, p)
                    if r & 1:
                        found = k
                        break
                    # advance to the next k-combination in lexicographic order
                    i = k - 1
                    while i >= 0 and idx[i] == n - k + i:
                        i -= 1
                    if i < 0:
                        break
                    idx[i] += 1
                    for j in range(i + 1, k):
                        idx[j] = idx[j - 1] + 1
                if found:
                    break
        if not found:
            return None
        return tuple(idx[i] for i in range(found)), r
    finally:
        free(full)
        free(sub)
        free(idx)
