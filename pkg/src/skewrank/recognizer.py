"""Decide whether a {0, 1, -1} matrix is skew-symmetric up to row/column signs.

The decision runs in polynomial time and is certified either way:

* accept: a :class:`SignCertificate` (one sign per row and per column) whose
  application yields a skew-symmetric matrix;
* reject: an :class:`~skewrank.evenrank.OddWitness`, an index set whose
  principal submatrix has odd rank.

The procedure reorders the support graph so that the "first neighbour"
function ``m`` is monotone inside each connected component, fixes signs along
the ``i -> m(i)`` edges, and, if the result is still not skew-symmetric,
follows the alternating chain ``k, l, m(k), m(l), ...`` from the first bad
entry to an odd-rank banded principal submatrix.

Internally positions are 0-based; every public field is 1-based.
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass

from .errors import InputError, InternalError, NotAViolation, StructureViolation
from .evenrank import OddWitness
from .field import Scalar
from .matrix import Matrix, _require_square, is_skew_symmetric, permute_simultaneous
from .matrix import principal_submatrix, rank, scale


@dataclass(frozen=True)
class SupportGraph:
    """Undirected graph on ``1..n`` with an edge wherever the entry is nonzero."""

    n: int
    edges: frozenset  # of (i, j) with i < j, 1-based

    def neighbours(self) -> list[list[int]]:
        """0-based adjacency lists, sorted."""
        adj = [[] for _ in range(self.n)]
        for i, j in self.edges:
            adj[i - 1].append(j - 1)
            adj[j - 1].append(i - 1)
        for a in adj:
            a.sort()
        return adj


@dataclass(frozen=True)
class MOrdering:
    """A simultaneous reordering together with the ``m`` values it realises.

    ``permutation[i]`` is the original index placed at position ``i + 1``;
    ``m_values[i]`` is the smallest position adjacent to position ``i + 1``
    (``n + 1`` for an isolated one); ``component_roots`` are the first
    positions of the connected components.
    """

    permutation: tuple[int, ...]
    m_values: tuple[int, ...]
    component_roots: frozenset


@dataclass(frozen=True)
class SignCertificate:
    row_signs: tuple[int, ...]
    col_signs: tuple[int, ...]

    def to_dict(self):
        return {"row_signs": list(self.row_signs), "col_signs": list(self.col_signs)}


@dataclass(frozen=True)
class ScalingCertificate:
    row_scalars: tuple[Scalar, ...]
    col_scalars: tuple[Scalar, ...]

    def to_dict(self):
        return {
            "row_scalars": [str(s) for s in self.row_scalars],
            "col_scalars": [str(s) for s in self.col_scalars],
        }


@dataclass(frozen=True)
class Recognition:
    """Outcome of :func:`recognize_sign`: exactly one of certificate/witness is set."""

    certificate: SignCertificate | None = None
    witness: OddWitness | None = None

    @property
    def accepted(self) -> bool:
        return self.certificate is not None


@dataclass(frozen=True)
class ScalingRecognition:
    certificate: ScalingCertificate | None = None
    reason: str | None = None
    cycle: tuple[int, ...] | None = None

    @property
    def accepted(self) -> bool:
        return self.certificate is not None


def _check_entries(m: Matrix):
    f = m.field
    allowed = {f.zero, f.one, f.minus_one}
    for i, row in enumerate(m.rows, 1):
        for j, x in enumerate(row, 1):
            if x not in allowed:
                raise InputError(f"entry ({i}, {j}) = {f.format(x)} is not in {{0, 1, -1}}")


def precheck(m: Matrix) -> SupportGraph | OddWitness:
    """Zero diagonal and symmetric support, or the 1x1/2x2 witness refuting them."""
    _require_square(m)
    _check_entries(m)
    rows, n = m.rows, m.nrows
    for i in range(n):
        if rows[i][i] != 0:
            return OddWitness((i + 1,), 1)
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            x, y = rows[i][j] != 0, rows[j][i] != 0
            if x != y:
                return OddWitness((i + 1, j + 1), 1)
            if x:
                edges.append((i + 1, j + 1))
    return SupportGraph(n, frozenset(edges))


def m_ordering(g: SupportGraph) -> MOrdering:
    """Greedy reordering making ``m`` nondecreasing within every component.

    Each component is opened at its smallest unplaced original index; the next
    vertex is always the one whose earliest placed neighbour sits at the
    smallest position (ties by original index).  Isolated vertices go last.
    """
    n = g.n
    adj = g.neighbours()
    pos = [-1] * n
    order: list[int] = []
    roots = []
    for start in range(n):
        if pos[start] >= 0 or not adj[start]:
            continue
        roots.append(len(order))
        heap = [(-1, start)]
        keyed = {start}
        while heap:
            _, v = heapq.heappop(heap)
            pos[v] = len(order)
            order.append(v)
            for u in adj[v]:
                # first placed neighbour fixes the key: later ones sit further right
                if u not in keyed:
                    keyed.add(u)
                    heapq.heappush(heap, (pos[v], u))
    for v in range(n):
        if not adj[v]:
            roots.append(len(order))
            pos[v] = len(order)
            order.append(v)
    m_values = tuple(
        (min(pos[u] for u in adj[v]) + 1) if adj[v] else n + 1 for v in order
    )
    return MOrdering(
        tuple(v + 1 for v in order), m_values, frozenset(r + 1 for r in roots)
    )


def check_m_ordering(ordering: MOrdering, g: SupportGraph) -> bool:
    """Validate an :class:`MOrdering` against its support graph."""
    n = g.n
    perm = ordering.permutation
    if sorted(perm) != list(range(1, n + 1)):
        return False
    adj = g.neighbours()
    pos = {v: i + 1 for i, v in enumerate(perm)}
    for i, v in enumerate(perm, 1):
        nb = [pos[u + 1] for u in adj[v - 1]]
        if ordering.m_values[i - 1] != (min(nb) if nb else n + 1):
            return False
    # components must be contiguous runs starting at the roots
    roots = sorted(ordering.component_roots)
    if not roots and n:
        return False
    comp_of = {}
    bounds = roots + [n + 1]
    for c in range(len(roots)):
        for i in range(bounds[c], bounds[c + 1]):
            comp_of[i] = c
    for i, j in g.edges:
        if comp_of[pos[i]] != comp_of[pos[j]]:
            return False
    for c in range(len(roots)):
        members = range(bounds[c] + 1, bounds[c + 1])
        ms = [ordering.m_values[i - 1] for i in members]
        if any(mi >= i for mi, i in zip(ms, members)):
            return False
        if any(a > b for a, b in zip(ms, ms[1:])):
            return False
    return True


def sign_normalize(m: Matrix, ordering: MOrdering) -> tuple[Matrix, list[int], list[int]]:
    """Flip rows/columns so that ``M[i][m(i)] = 1`` and ``M[m(i)][i] = -1``.

    ``m`` must already be reordered by ``ordering``.  Non-root positions are
    processed in increasing order; roots are never flipped.  Returns the
    normalized matrix and the flipped row and column positions (1-based).
    """
    f = m.field
    rows = [list(r) for r in m.rows]
    row_flips: list[int] = []
    col_flips: list[int] = []
    if f.characteristic == 2:
        return m, row_flips, col_flips
    n = m.nrows
    for i in range(n):
        mi = ordering.m_values[i] - 1
        if i + 1 in ordering.component_roots or mi >= n:
            continue
        if rows[i][mi] == f.minus_one:
            rows[i] = [f.neg(x) for x in rows[i]]
            row_flips.append(i + 1)
        if rows[mi][i] == f.one:
            for r in rows:
                r[i] = f.neg(r[i])
            col_flips.append(i + 1)
    return Matrix._raw(rows, f, n), row_flips, col_flips


def _first_violation(m: Matrix) -> tuple[int, int] | None:
    f, rows = m.field, m.rows
    for k in range(m.nrows):
        for l in range(k):
            x = rows[k][l]
            if x != 0 and x != f.neg(rows[l][k]):
                return k + 1, l + 1
    return None


def extract_witness(m: Matrix, ordering: MOrdering, k: int, l: int) -> tuple[int, ...]:
    """Odd-rank principal index set (positions, increasing) for a violation at (k, l).

    ``m`` is the normalized, reordered matrix and (k, l) its lexicographically
    first entry with ``k > l`` and ``m[k][l] != -m[l][k] != 0``.
    """
    f, rows = m.field, m.rows
    n = m.nrows
    if not (1 <= l < k <= n):
        raise NotAViolation(f"need 1 <= l < k <= n, got k={k}, l={l}")
    x = rows[k - 1][l - 1]
    if x == 0 or x == f.neg(rows[l - 1][k - 1]):
        raise NotAViolation(f"entry ({k}, {l}) is not a skew-symmetry violation")

    mv = ordering.m_values
    seq = [k, l]
    while True:
        nxt = mv[seq[-2] - 1]
        if nxt >= seq[-1]:
            break
        seq.append(nxt)
    q = len(seq)
    if q < 3:
        raise StructureViolation(f"chain from ({k}, {l}) stops after {q} steps")
    # entries between consecutive chain elements below the top pair
    for t in range(1, q - 2):
        if rows[seq[t] - 1][seq[t + 1] - 1] != 0:
            return tuple(sorted(seq[: t + 2]))
    return tuple(sorted(seq))


def apply_certificate(m: Matrix, cert: SignCertificate | ScalingCertificate) -> Matrix:
    """Scale rows, then columns, by the certificate's entries."""
    if isinstance(cert, SignCertificate):
        return scale(m, cert.row_signs, cert.col_signs)
    return scale(m, cert.row_scalars, cert.col_scalars)


def recognize_sign(m: Matrix) -> Recognition:
    """Certified decision: is ``m`` skew-symmetric after multiplying rows/columns by -1?"""
    pre = precheck(m)
    if isinstance(pre, OddWitness):
        return Recognition(witness=_verified_witness(m, pre))
    n = m.nrows
    ordering = m_ordering(pre)
    perm = ordering.permutation
    normalized, row_flips, col_flips = sign_normalize(permute_simultaneous(m, perm), ordering)

    violation = _first_violation(normalized)
    if violation is None:
        row_signs = [1] * n
        col_signs = [1] * n
        for i in row_flips:
            row_signs[perm[i - 1] - 1] = -1
        for i in col_flips:
            col_signs[perm[i - 1] - 1] = -1
        cert = SignCertificate(tuple(row_signs), tuple(col_signs))
        if not is_skew_symmetric(apply_certificate(m, cert)):
            raise InternalError(f"certificate {cert} failed re-verification")
        return Recognition(certificate=cert)

    positions = extract_witness(normalized, ordering, *violation)
    indices = tuple(sorted(perm[i - 1] for i in positions))
    r = rank(principal_submatrix(m, indices))
    return Recognition(witness=_verified_witness(m, OddWitness(indices, r)))


def _verified_witness(m: Matrix, w: OddWitness) -> OddWitness:
    r = rank(principal_submatrix(m, w.indices))
    if r != w.observed_rank or r % 2 == 0:
        raise InternalError(f"witness {w} has rank {r}")
    return w


def recognize_general_scaling(m: Matrix) -> ScalingRecognition:
    """Decide whether nonzero row/column scalars make ``m`` skew-symmetric.

    ``D m E`` is skew-symmetric iff ``t_i = d_i / e_i`` satisfies
    ``t_i m[i][j] = -t_j m[j][i]`` on every edge, so ``t`` is propagated along
    a BFS tree of each component and checked on the remaining edges.
    """
    _require_square(m)
    f, rows, n = m.field, m.rows, m.nrows
    for i in range(n):
        if rows[i][i] != 0:
            return ScalingRecognition(reason=f"nonzero diagonal entry at ({i + 1}, {i + 1})")
    for i in range(n):
        for j in range(i + 1, n):
            if (rows[i][j] != 0) != (rows[j][i] != 0):
                return ScalingRecognition(
                    reason=f"asymmetric support at ({i + 1}, {j + 1})"
                )
    adj = [[j for j in range(n) if rows[i][j] != 0] for i in range(n)]
    t = [None] * n
    parent = [-1] * n
    for root in range(n):
        if t[root] is not None:
            continue
        t[root] = f.one
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                if t[v] is None:
                    # t_v = -m[u][v] / m[v][u] * t_u
                    t[v] = f.mul(f.div(f.neg(rows[u][v]), rows[v][u]), t[u])
                    parent[v] = u
                    queue.append(v)
    for i in range(n):
        for j in adj[i]:
            if j <= i:
                continue
            if f.mul(t[i], rows[i][j]) != f.neg(f.mul(t[j], rows[j][i])):
                cycle = _fundamental_cycle(parent, i, j)
                return ScalingRecognition(
                    reason=f"inconsistent cycle {'-'.join(map(str, cycle))}", cycle=cycle
                )
    cert = ScalingCertificate(
        tuple(Scalar(x, f) for x in t), tuple(Scalar(f.one, f) for _ in range(n))
    )
    if not is_skew_symmetric(apply_certificate(m, cert)):
        raise InternalError("scaling certificate failed re-verification")
    return ScalingRecognition(certificate=cert)


def _fundamental_cycle(parent: list[int], i: int, j: int) -> tuple[int, ...]:
    """Tree path i -> j closed by the edge {i, j}, as 1-based vertices starting at i."""

    def to_root(v):
        path = [v]
        while parent[v] >= 0:
            v = parent[v]
            path.append(v)
        return path

    pi, pj = to_root(i), to_root(j)
    common = set(pi) & set(pj)
    up = [v for v in pi if v not in common]
    meet = next(v for v in pi if v in common)
    down = [v for v in pj if v not in common]
    cycle = up + [meet] + down[::-1]
    return tuple(v + 1 for v in cycle) + (i + 1,)
