"""Dense linear algebra over F_p with numpy."""

from __future__ import annotations

import numpy as np


def row_reduce(A, p: int):
    """Reduced row echelon form of ``A`` modulo ``p``; returns (R, pivot columns)."""
    M = np.array(A, dtype=np.int64) % p
    nrows, ncols = M.shape
    pivots = []
    row = 0
    for col in range(ncols):
        if row >= nrows:
            break
        nz = np.nonzero(M[row:, col])[0]
        if nz.size == 0:
            continue
        piv = row + nz[0]
        if piv != row:
            M[[row, piv]] = M[[piv, row]]
        inv = pow(int(M[row, col]), -1, p)
        M[row] = (M[row] * inv) % p
        col_vals = M[:, col].copy()
        col_vals[row] = 0
        mask = col_vals != 0
        if mask.any():
            M[mask] = (M[mask] - np.outer(col_vals[mask], M[row])) % p
        pivots.append(col)
        row += 1
    return M[:row], pivots


def rank_mod_p(A, p: int) -> int:
    A = np.asarray(A)
    if A.size == 0:
        return 0
    return len(row_reduce(A, p)[1])


def kernel_mod_p(A, p: int) -> np.ndarray:
    """Basis of the right kernel of ``A`` mod ``p``, as rows."""
    A = np.asarray(A, dtype=np.int64)
    ncols = A.shape[1]
    if A.shape[0] == 0:
        return np.eye(ncols, dtype=np.int64)
    R, pivots = row_reduce(A, p)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = np.zeros(ncols, dtype=np.int64)
        v[f] = 1
        for i, pc in enumerate(pivots):
            v[pc] = (-R[i, f]) % p
        basis.append(v)
    if not basis:
        return np.zeros((0, ncols), dtype=np.int64)
    return np.array(basis)
