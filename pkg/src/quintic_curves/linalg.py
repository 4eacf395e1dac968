"""Dense exact linear algebra over F_p, plus a rational-arithmetic oracle.

Matrices are plain numpy int64 arrays with entries reduced into [0, p).
Elimination pivots left-to-right on the first nonzero entry per column,
with no pivot heuristics, so ranks, echelon forms and kernel bases are
canonical and reproducible.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

ORACLE_MAX_DIM = 150


class ConsistencyError(RuntimeError):
    """An internal invariant (rank-nullity, splitting decode, ...) failed."""


def as_matrix(entries, p: int) -> np.ndarray:
    a = np.asarray(entries, dtype=np.int64)
    if a.ndim != 2:
        raise ValueError("matrix must be two-dimensional")
    return a % p


def row_reduce(m, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over F_p.

    Returns (rref, pivot_columns).  Handles empty matrices.
    """
    a = as_matrix(m, p)
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        a[r] = a[r] * pow(int(a[r, c]), p - 2, p) % p
        col = a[:, c].copy()
        col[r] = 0
        # products stay below p^2 < 2^63, so int64 is exact
        a = (a - np.outer(col, a[r])) % p
        pivots.append(c)
        r += 1
    return a, pivots


def rank(m, p: int) -> int:
    _, pivots = row_reduce(m, p)
    return len(pivots)


def kernel_basis(m, p: int) -> np.ndarray:
    """Canonical basis of the right kernel, one vector per row.

    Each basis vector carries a 1 in its free column and 0 in every
    other free column (pivot-normalized reduced form).  Asserts
    rank + nullity = cols.
    """
    a = as_matrix(m, p)
    rows, cols = a.shape
    rref, pivots = row_reduce(a, p)
    free = [c for c in range(cols) if c not in set(pivots)]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for k, fc in enumerate(free):
        basis[k, fc] = 1
        for r, pc in enumerate(pivots):
            basis[k, pc] = (-rref[r, fc]) % p
    if len(pivots) + basis.shape[0] != cols:
        raise ConsistencyError("rank-nullity violated")
    return basis


def rank_exact(m) -> int:
    """Rank over Q of an integer matrix, by fraction-free-ish elimination.

    Cross-check oracle for unlucky-prime detection; limited to
    150x150 to keep the exact arithmetic affordable.
    """
    a = np.asarray(m, dtype=object)
    if a.ndim != 2:
        raise ValueError("matrix must be two-dimensional")
    rows, cols = a.shape
    if rows > ORACLE_MAX_DIM or cols > ORACLE_MAX_DIM:
        raise ValueError(f"rational oracle limited to {ORACLE_MAX_DIM}x{ORACLE_MAX_DIM}")
    work = [[Fraction(int(x)) for x in row] for row in a]
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = None
        for i in range(r, rows):
            if work[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        pr = work[r]
        inv = 1 / pr[c]
        work[r] = [x * inv for x in pr]
        pr = work[r]
        for i in range(rows):
            if i != r and work[i][c] != 0:
                f = work[i][c]
                work[i] = [x - f * y for x, y in zip(work[i], pr)]
        r += 1
    return r
