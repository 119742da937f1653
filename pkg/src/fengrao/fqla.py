"""Dense exact linear algebra over GF(q).

Matrices and vectors are integer numpy arrays of canonical field elements;
every routine takes the field as its first argument.  Elimination pivots on
the first nonzero entry in column order, so all results are deterministic.
"""

from __future__ import annotations

import numpy as np

from .errors import (
    DimensionMismatchError,
    InconsistentError,
    NotInRowSpaceError,
    NotUniqueError,
    SingularError,
)
from .gf import GF


def as_matrix(M) -> np.ndarray:
    M = np.array(M, dtype=np.int64)
    if M.ndim == 1:
        M = M[None, :]
    if M.ndim != 2:
        raise DimensionMismatchError("expected a 2-D array")
    return M


def rref(F: GF, M):
    """Reduced row-echelon form.

    Returns ``(R, rank, pivots)`` where ``pivots`` lists the pivot columns.
    """
    R = as_matrix(M).copy()
    rows, cols = R.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(R[r:, c])
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            R[[r, k]] = R[[k, r]]
        R[r] = F.mul(R[r], F.inv(int(R[r, c])))
        col = R[:, c].copy()
        col[r] = 0
        hit = np.flatnonzero(col)
        if hit.size:
            R[hit] = F.sub(R[hit], F.mul(col[hit][:, None], R[r][None, :]))
        pivots.append(c)
        r += 1
    return R, r, pivots


def rank(F: GF, M) -> int:
    M = as_matrix(M)
    if M.size == 0:
        return 0
    return rref(F, M)[1]


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int64)


def invert(F: GF, M) -> np.ndarray:
    M = as_matrix(M)
    n, cols = M.shape
    if n != cols:
        raise DimensionMismatchError(f"cannot invert a {n}x{cols} matrix")
    R, r, _ = rref(F, np.hstack([M, identity(n)]))
    if r < n or not np.array_equal(R[:, :n], identity(n)):
        raise SingularError("matrix is singular")
    return R[:, n:]


def solve(F: GF, M, b) -> np.ndarray:
    """The unique ``x`` with ``M x = b``."""
    M = as_matrix(M)
    b = np.asarray(b, dtype=np.int64).ravel()
    rows, cols = M.shape
    if b.size != rows:
        raise DimensionMismatchError(f"right-hand side has length {b.size}, expected {rows}")
    if rows == cols and rank(F, M) < cols:
        raise SingularError("matrix is singular")
    R, r, pivots = rref(F, np.hstack([M, b[:, None]]))
    if cols in pivots:
        raise InconsistentError("system has no solution")
    if r < cols:
        raise SingularError("solution is not unique")
    return R[:cols, cols].copy()


def nullspace(F: GF, M) -> np.ndarray:
    """Rows spanning ``{x : M x = 0}``."""
    M = as_matrix(M)
    cols = M.shape[1]
    R, r, pivots = rref(F, M)
    free = [c for c in range(cols) if c not in pivots]
    out = np.zeros((len(free), cols), dtype=np.int64)
    for k, f in enumerate(free):
        out[k, f] = 1
        for row, pc in enumerate(pivots):
            out[k, pc] = F.neg(int(R[row, f]))
    return out


def in_row_space(F: GF, M, v) -> bool:
    M = as_matrix(M)
    return rank(F, np.vstack([M, np.asarray(v, dtype=np.int64)[None, :]])) == rank(F, M)


def row_space_extension(F: GF, M, prefix) -> int:
    """The unique ``s`` such that ``(prefix, s)`` lies in the row space of ``M``.

    ``M`` has ``j`` columns and ``prefix`` has ``j - 1`` entries.  Raises
    NotUniqueError when the last column of ``M`` is not determined by the
    others, NotInRowSpaceError when ``prefix`` is outside the row space of the
    first ``j - 1`` columns.
    """
    M = as_matrix(M)
    prefix = np.asarray(prefix, dtype=np.int64).ravel()
    j = M.shape[1]
    if prefix.size != j - 1:
        raise DimensionMismatchError(f"prefix has length {prefix.size}, expected {j - 1}")
    R, r, pivots = rref(F, M)
    if (j - 1) in pivots:
        raise NotUniqueError("last column is independent of the others")
    R = R[:r]
    coeffs = prefix[pivots] if pivots else np.zeros(0, dtype=np.int64)
    residual = F.sub(prefix, F.matmul(coeffs, R[:, :j - 1])) if r else prefix
    if np.any(residual):
        raise NotInRowSpaceError("prefix is not in the row space")
    if not r:
        return 0
    return int(F.dot(coeffs, R[:, j - 1]))


def express_in_basis(F: GF, v, B) -> np.ndarray:
    """Coefficients ``c`` (length n) with ``v = sum(c_i * b_i)``.

    ``B`` is either a matrix whose rows are the basis vectors or an object
    with a ``coordinates(v)`` method (such as an IndexedBasis).
    """
    if hasattr(B, "coordinates"):
        return B.coordinates(v)
    B = as_matrix(B)
    v = np.asarray(v, dtype=np.int64).ravel()
    if B.shape[0] != B.shape[1] or v.size != B.shape[1]:
        raise DimensionMismatchError("basis must be n x n and v of length n")
    return solve(F, B.T, v)
