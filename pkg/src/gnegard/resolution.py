"""Syzygies, graded free resolutions and Betti tables."""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field

from gnegard.field import inverse
from gnegard.groebner import Ideal, TermSpace, buchberger
from gnegard.matrix import GradedMatrix
from gnegard.poly import WB, Poly

log = logging.getLogger(__name__)


def _degree_shift(ring, d: int) -> int:
    """Ring-key offset that adds ``d`` to the first weight (the total degree)."""
    return d << ring._wshift[0]


def _as_matrix(obj) -> GradedMatrix:
    if isinstance(obj, GradedMatrix):
        return obj
    if isinstance(obj, Ideal):
        gens = obj.generators
        ring = obj.ring
    else:
        gens = list(obj)
        ring = gens[0].ring
    return GradedMatrix(ring, [gens], [0], [g.degree() for g in gens])


def syzygies(M, prune=False) -> GradedMatrix:
    """Generators of the kernel of a graded matrix (or of a list of generators).

    Each column v_j of M is paired with the unit vector e_j in F + R^m.  A
    Groebner basis is computed for an order in which the F block dominates,
    and in which e_j is weighted by the leading term of v_j (a Schreyer-type
    order induced by the input).  Basis elements whose leading term lies in
    the R^m block have zero F part; they generate the syzygy module.

    With ``prune=True`` the result is reduced to a minimal generating set.
    """
    M = _as_matrix(M)
    ring = M.ring
    if not ring.graded:
        raise ValueError("syzygies need a graded monomial order")
    s, m = M.nrows, M.ncols
    if m == 0:
        return GradedMatrix(ring, [[] for _ in range(m)], [], [], check=False)
    cols = M.columns()
    F_min = min(M.row_degrees)
    F_shift = [_degree_shift(ring, a - F_min) for a in M.row_degrees]
    BIG = 1 << (ring.EB + WB * len(ring.weights) + 8)
    JB = max(m - 1, 1).bit_length()
    shifts = [sh + BIG for sh in F_shift]
    ties = list(range(s))
    b_min = min(M.col_degrees)
    for j, v in enumerate(cols):
        lead = None
        for k, f in enumerate(v):
            if f:
                K = f.lm() + F_shift[k]
                if lead is None or (K, k) > lead:
                    lead = (K, k)
        if lead is None:
            shifts.append(_degree_shift(ring, M.col_degrees[j] - b_min))
            ties.append(s + j)
        else:
            shifts.append(lead[0])
            ties.append(s + ((lead[1] << JB) | j))
    degrees = list(M.row_degrees) + list(M.col_degrees)
    space = TermSpace(ring, shifts, ties, degrees)
    unit = ring.one()
    zero = ring.zero()
    inputs = []
    for j, v in enumerate(cols):
        vec = list(v) + [zero] * m
        vec[s + j] = unit
        inputs.append(space.encode(vec))
    res = buchberger(inputs, space)
    syz = []
    for d in res.basis:
        if (max(d) >> space.TB) >= BIG:
            continue
        parts = space.decode(d)
        assert all(f.is_zero() for f in parts[:s]), "syzygy with nonzero module part"
        syz.append(parts[s:])
    K = _columns_to_matrix(ring, syz, M.col_degrees)
    if prune:
        K = minimal_columns(K)
    return K


def _columns_to_matrix(ring, columns, row_degrees) -> GradedMatrix:
    m = len(row_degrees)
    col_degrees = []
    for v in columns:
        d = None
        for k, f in enumerate(v):
            if f:
                d = f.degree() + row_degrees[k]
                break
        col_degrees.append(d)
    order = sorted(range(len(columns)), key=lambda i: col_degrees[i])
    rows = [[columns[i][k] for i in order] for k in range(m)]
    return GradedMatrix(ring, rows, row_degrees, [col_degrees[i] for i in order])


def minimal_columns(M: GradedMatrix) -> GradedMatrix:
    """Select a minimal generating subset of the columns of a graded matrix.

    Columns are fed to a degree-by-degree Buchberger run; a column is kept
    iff it is not in the span of the columns of lower degree and of the
    columns of the same degree kept before it.
    """
    ring = M.ring
    if M.ncols == 0:
        return M
    r_min = min(M.row_degrees)
    shifts = [_degree_shift(ring, a - r_min) for a in M.row_degrees]
    space = TermSpace(ring, shifts, list(range(M.nrows)), M.row_degrees)
    cols = M.columns()
    order = sorted(range(M.ncols), key=lambda j: M.col_degrees[j])
    inputs = [space.encode(cols[j]) for j in order]
    res = buchberger(inputs, space, reduce_result=False)
    keep = sorted(order[i] for i in res.minimal_inputs)
    keep.sort(key=lambda j: (M.col_degrees[j], j))
    rows = [[M.entries[i][j] for j in keep] for i in range(M.nrows)]
    return GradedMatrix(ring, rows, M.row_degrees, [M.col_degrees[j] for j in keep], check=False)


class BettiTable:
    """Graded Betti numbers beta[i, j] = rank of the degree-j part of F_i.

    F_0 = R for a resolution of R/I, so beta[0, 0] = 1 and row i = 1 holds
    the degrees of minimal generators of I.
    """

    def __init__(self, entries=None):
        self.entries = {k: v for k, v in dict(entries or {}).items() if v}
        if any(v < 0 for v in self.entries.values()):
            raise ValueError("Betti numbers must be non-negative")

    @classmethod
    def from_degrees(cls, degree_lists) -> BettiTable:
        table = Counter()
        for i, degs in enumerate(degree_lists):
            for d in degs:
                table[(i, d)] += 1
        return cls(table)

    def __getitem__(self, ij):
        return self.entries.get(ij, 0)

    def __eq__(self, other):
        return isinstance(other, BettiTable) and self.entries == other.entries

    def __hash__(self):
        return hash(frozenset(self.entries.items()))

    @property
    def length(self) -> int:
        return max((i for i, _ in self.entries), default=0)

    def row(self, i) -> dict:
        return {j: v for (k, j), v in sorted(self.entries.items()) if k == i}

    def ranks(self) -> list:
        return [sum(self.row(i).values()) for i in range(self.length + 1)]

    def twists(self) -> list:
        """Per homological index, the sheaf twists O(-j) as a sorted list."""
        return [sorted(-j for (k, j), v in self.entries.items() if k == i for _ in range(v))
                for i in range(self.length + 1)]

    def to_json(self) -> list:
        return [[i, j, v] for (i, j), v in sorted(self.entries.items())]

    def __str__(self):
        """Standard grid: column i, row j - i."""
        if not self.entries:
            return "(empty)"
        L = self.length
        rows = sorted({j - i for i, j in self.entries})
        width = max(len(str(v)) for v in self.entries.values()) + 1
        width = max(width, len(str(L)) + 1, 2)
        lab = max(len(str(r)) for r in rows) + 1
        head = " " * (lab + 1) + "".join(str(i).rjust(width) for i in range(L + 1))
        lines = [head, " " * (lab + 1) + "-" * (width * (L + 1))]
        for rr in rows:
            cells = []
            for i in range(L + 1):
                v = self.entries.get((i, i + rr), 0)
                cells.append((str(v) if v else ".").rjust(width))
            lines.append(("%d:" % rr).rjust(lab + 1) + "".join(cells))
        return "\n".join(lines)

    def __repr__(self):
        return "BettiTable(%r)" % self.to_json()


@dataclass
class Resolution:
    """Chain of graded matrices d_1, d_2, ... with d_i : F_i -> F_{i-1}."""

    differentials: list
    complete: bool = True
    notes: list = field(default_factory=list)

    @property
    def ring(self):
        return self.differentials[0].ring

    def degrees(self) -> list:
        if not self.differentials:
            return [[0]]
        out = [list(self.differentials[0].row_degrees)]
        for d in self.differentials:
            out.append(list(d.col_degrees))
        return out

    def betti(self) -> BettiTable:
        return BettiTable.from_degrees(self.degrees())

    def check_complex(self) -> bool:
        """Consecutive differentials compose to zero."""
        ds = self.differentials
        return all((ds[i] * ds[i + 1]).is_zero() for i in range(len(ds) - 1))


def _ideal_matrix(I) -> GradedMatrix:
    gens = I.minimal_generators() if isinstance(I, Ideal) else list(I)
    gens = sorted(gens, key=lambda g: (g.degree(), g.lm()))
    return GradedMatrix(gens[0].ring, [gens], [0], [g.degree() for g in gens])


def minimal_free_resolution(I, length_bound=None) -> Resolution:
    """Minimal graded free resolution of R/I.

    Each step takes the syzygies of the previous differential and keeps a
    minimal generating subset, so the chain is minimal by construction.
    ``length_bound`` defaults to the number of variables (Hilbert's syzygy
    theorem); if it is reached before the kernel vanishes the result is
    returned with ``complete=False``.
    """
    if isinstance(I, Ideal) and not I.is_homogeneous():
        raise ValueError("minimal resolutions need a homogeneous ideal")
    d = _ideal_matrix(I)
    bound = d.ring.nvars if length_bound is None else length_bound
    diffs = [d]
    while True:
        K = syzygies(diffs[-1], prune=True)
        log.debug("step %d: %d syzygies", len(diffs) + 1, K.ncols)
        if K.ncols == 0:
            break
        if len(diffs) >= bound:
            return Resolution(diffs, False, ["length bound %d reached" % bound])
        diffs.append(K)
    return Resolution(diffs)


def schreyer_resolution(I, length_bound=None) -> Resolution:
    """A (generally non-minimal) resolution from unpruned syzygy generators."""
    d = _ideal_matrix(I)
    ring = d.ring
    bound = ring.nvars + 1 if length_bound is None else length_bound
    diffs = [d]
    while len(diffs) < bound:
        K = syzygies(diffs[-1])
        if K.ncols == 0:
            return Resolution(diffs)
        diffs.append(K)
    return Resolution(diffs, False, ["length bound %d reached" % bound])


def minimalize(res: Resolution) -> Resolution:
    """Cancel unit entries by Gaussian elimination over F_p.

    A nonzero constant entry u = d_i[a][b] splits off R e_b -> R f_a: the
    entries of d_i are updated by d[a'][b'] -= d[a'][b] d[a][b'] / u, row b of
    d_{i+1} and column a of d_{i-1} are deleted.
    """
    ring = res.ring
    p = ring.p
    mats = [[list(row) for row in d.entries] for d in res.differentials]
    rdeg = [list(d.row_degrees) for d in res.differentials]
    cdeg = [list(d.col_degrees) for d in res.differentials]
    changed = True
    while changed:
        changed = False
        for i, A in enumerate(mats):
            hit = None
            for a, row in enumerate(A):
                for b, f in enumerate(row):
                    if f and f.degree() == 0:
                        hit = (a, b)
                        break
                if hit:
                    break
            if hit is None:
                continue
            a, b = hit
            uinv = inverse(A[a][b].constant_value(), p)
            rowa = A[a]
            colb = [A[k][b] for k in range(len(A))]
            newA = []
            for k, row in enumerate(A):
                if k == a:
                    continue
                ck = colb[k]
                new_row = []
                for j, f in enumerate(row):
                    if j == b:
                        continue
                    if ck and rowa[j]:
                        f = f - (ck * rowa[j]).scale(uinv)
                    new_row.append(f)
                newA.append(new_row)
            mats[i] = newA
            del rdeg[i][a]
            del cdeg[i][b]
            if i + 1 < len(mats):
                del mats[i + 1][b]
                del rdeg[i + 1][b]
            if i > 0:
                for row in mats[i - 1]:
                    del row[a]
                del cdeg[i - 1][a]
            changed = True
            break
    diffs = []
    for A, rd, cd in zip(mats, rdeg, cdeg):
        if not cd:
            break
        diffs.append(GradedMatrix(ring, A if A else [[] for _ in rd], rd, cd, check=False))
    return Resolution(diffs, res.complete, list(res.notes))


def betti_table(I, length_bound=None) -> BettiTable:
    return minimal_free_resolution(I, length_bound).betti()
