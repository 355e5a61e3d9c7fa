"""Graded polynomial matrices, determinants and minors.

Degree convention: ``row_degrees`` and ``col_degrees`` are the degrees of the
generators of the target and source free modules, i.e. the matrix represents
a degree-0 map  (+) R(-col_degrees[j])  ->  (+) R(-row_degrees[i]),  so a
nonzero entry (i, j) is homogeneous of degree ``col_degrees[j] - row_degrees[i]``.
On sheaves the generator of degree d is O(-d); a bundle map E -> F between
split bundles therefore has ``col_degrees = -twists(E)``,
``row_degrees = -twists(F)``.
"""

from __future__ import annotations

import itertools
import random

from gnegard.poly import Poly, PolyRing


class DegreeError(ValueError):
    """An entry violates the homogeneity convention."""


def random_form(ring: PolyRing, degree: int, seed=None) -> Poly:
    """Homogeneous form of ``degree`` with seeded pseudorandom coefficients.

    ``seed`` may be an int or an existing :class:`random.Random` stream.
    Coefficients are uniform over F_p; a degree-0 form is a nonzero constant.
    """
    if degree < 0:
        raise ValueError("degree must be non-negative")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    p = ring.p
    if degree == 0:
        return ring.const(rng.randrange(1, p))
    terms = {}
    for m in sorted(ring.monomials(degree)):
        c = rng.randrange(p)
        if c:
            terms[m] = c
    return Poly(ring, terms)


class GradedMatrix:
    """Matrix of homogeneous polynomials with generator degrees on both sides."""

    def __init__(self, ring, entries, row_degrees=None, col_degrees=None, check=True):
        self.ring = ring
        self.entries = [list(row) for row in entries]
        self.nrows = len(self.entries)
        self.ncols = len(self.entries[0]) if self.entries else len(col_degrees or ())
        if any(len(row) != self.ncols for row in self.entries):
            raise ValueError("ragged matrix")
        if row_degrees is None or col_degrees is None:
            row_degrees, col_degrees = _infer_degrees(self.entries, row_degrees, col_degrees)
        self.row_degrees = tuple(row_degrees)
        self.col_degrees = tuple(col_degrees)
        if len(self.row_degrees) != self.nrows or len(self.col_degrees) != self.ncols:
            raise ValueError("degree vectors do not match the matrix shape")
        if check:
            self.check_homogeneous()

    def check_homogeneous(self):
        for i, row in enumerate(self.entries):
            for j, f in enumerate(row):
                if f.is_zero():
                    continue
                want = self.col_degrees[j] - self.row_degrees[i]
                if want < 0 or not f.is_homogeneous() or f.degree() != want:
                    raise DegreeError("entry (%d, %d) is not homogeneous of degree %d"
                                      % (i, j, want))

    @property
    def shape(self):
        return self.nrows, self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def column(self, j):
        return [row[j] for row in self.entries]

    def columns(self):
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self) -> GradedMatrix:
        """Transpose; generator degrees are negated (dual map)."""
        cols = [[self.entries[i][j] for i in range(self.nrows)] for j in range(self.ncols)]
        return GradedMatrix(self.ring, cols, [-d for d in self.col_degrees],
                            [-d for d in self.row_degrees], check=False)

    def __mul__(self, other: GradedMatrix) -> GradedMatrix:
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch %s * %s" % (self.shape, other.shape))
        zero = self.ring.zero()
        out = []
        for i in range(self.nrows):
            row = []
            for j in range(other.ncols):
                acc = zero
                for k in range(self.ncols):
                    a = self.entries[i][k]
                    b = other.entries[k][j]
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return GradedMatrix(self.ring, out, self.row_degrees, other.col_degrees, check=False)

    def is_zero(self) -> bool:
        return all(f.is_zero() for row in self.entries for f in row)

    def nonzero_entries(self):
        return [f for row in self.entries for f in row if f]

    def __eq__(self, other):
        return (isinstance(other, GradedMatrix) and self.entries == other.entries
                and self.row_degrees == other.row_degrees
                and self.col_degrees == other.col_degrees)

    def __repr__(self):
        return "GradedMatrix(%dx%d, rows=%s, cols=%s)" % (
            self.nrows, self.ncols, list(self.row_degrees), list(self.col_degrees))


def _infer_degrees(entries, row_degrees, col_degrees):
    nrows = len(entries)
    ncols = len(entries[0]) if entries else 0
    if row_degrees is None:
        row_degrees = [0] * nrows
    if col_degrees is None:
        col_degrees = []
        for j in range(ncols):
            d = None
            for i in range(nrows):
                f = entries[i][j]
                if f:
                    d = f.degree() + row_degrees[i]
                    break
            col_degrees.append(0 if d is None else d)
    return row_degrees, col_degrees


def identity(ring, n, degrees=None) -> GradedMatrix:
    degrees = degrees or [0] * n
    rows = [[ring.one() if i == j else ring.zero() for j in range(n)] for i in range(n)]
    return GradedMatrix(ring, rows, degrees, degrees, check=False)


def morphism_matrix(ring, E_twists, F_twists, seed=None) -> GradedMatrix:
    """Random map E -> F between split bundles on P^r.

    Entry (i, j) is a random form of degree ``F[i] - E[j]``, zero when that is
    negative.  Entries are drawn row by row from one seeded stream.
    """
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    rows = []
    for f in F_twists:
        row = []
        for e in E_twists:
            d = f - e
            row.append(random_form(ring, d, rng) if d >= 0 else ring.zero())
        rows.append(row)
    return GradedMatrix(ring, rows, [-f for f in F_twists], [-e for e in E_twists])


def _laplace(entries, rows, ring, memo, cols_mask, depth):
    """Determinant of ``entries[rows[depth:]]`` against the columns in ``cols_mask``."""
    if depth == len(rows):
        return ring.one()
    key = cols_mask
    hit = memo.get(key)
    if hit is not None:
        return hit
    i = rows[depth]
    acc = ring.zero()
    sign = 1
    j = 0
    mask = cols_mask
    while mask:
        if mask & 1:
            a = entries[i][j]
            if a:
                sub = _laplace(entries, rows, ring, memo, cols_mask & ~(1 << j), depth + 1)
                if sub:
                    term = a * sub
                    acc = acc + term if sign > 0 else acc - term
            sign = -sign
        mask >>= 1
        j += 1
    memo[key] = acc
    return acc


def _det_rows_cols(M, rows, cols, memo=None):
    bits = 0
    for j in cols:
        bits |= 1 << j
    if memo is None:
        memo = {}
    return _laplace(M.entries, rows, M.ring, memo, bits, 0)


def determinant(M: GradedMatrix) -> Poly:
    """Determinant by Laplace expansion along rows, memoized on column subsets."""
    if M.nrows != M.ncols:
        raise ValueError("determinant of a non-square %dx%d matrix" % M.shape)
    if M.nrows == 0:
        return M.ring.one()
    return _det_rows_cols(M, list(range(M.nrows)), range(M.ncols))


def determinant_by_column(M: GradedMatrix, j: int = -1) -> Poly:
    """Cofactor expansion along column ``j``; an independent route to the determinant."""
    n = M.nrows
    if n != M.ncols:
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return M.ring.one()
    j %= n
    acc = M.ring.zero()
    others = [c for c in range(n) if c != j]
    for i in range(n):
        a = M.entries[i][j]
        if not a:
            continue
        rows = [r for r in range(n) if r != i]
        sub = _det_rows_cols(M, rows, others) if rows else M.ring.one()
        term = a * sub
        acc = acc + term if (i + j) % 2 == 0 else acc - term
    return acc


def minors(M: GradedMatrix, k: int) -> list:
    """All k x k minors.

    Order: row subsets in lexicographic order (outer loop), column subsets in
    lexicographic order (inner loop), as produced by ``itertools.combinations``.
    """
    if not 1 <= k <= min(M.nrows, M.ncols):
        raise ValueError("minor size %d out of range for a %dx%d matrix" % ((k,) + M.shape))
    out = []
    colsets = list(itertools.combinations(range(M.ncols), k))
    for rows in itertools.combinations(range(M.nrows), k):
        memo = {}
        for cols in colsets:
            out.append(_det_rows_cols(M, list(rows), cols, memo))
    return out


def adjugate(M: GradedMatrix) -> GradedMatrix:
    """Classical adjoint: adj(M)[j][i] = (-1)^(i+j) * minor deleting row i, column j.

    Satisfies adj(M) * M = M * adj(M) = det(M) * Id.
    """
    n = M.nrows
    if n != M.ncols:
        raise ValueError("adjugate of a non-square matrix")
    ring = M.ring
    adj = [[ring.zero()] * n for _ in range(n)]
    for i in range(n):
        rows = [r for r in range(n) if r != i]
        memo = {}
        for j in range(n):
            cols = [c for c in range(n) if c != j]
            m = _det_rows_cols(M, rows, cols, memo) if rows else ring.one()
            adj[j][i] = m if (i + j) % 2 == 0 else -m
    # adj maps F -> E; its generator degrees are shifted by deg det
    D = sum(M.col_degrees) - sum(M.row_degrees)
    return GradedMatrix(ring, adj, [c for c in M.col_degrees],
                        [r + D for r in M.row_degrees], check=False)
