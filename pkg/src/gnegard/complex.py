"""The global Gulliksen-Negard complex of a map of equal-rank bundles.

For phi : E -> F of rank e >= 3 with line bundle L = det E (x) (det F)^-1 the
complex reads

    0 -> L^2 -> E (x) F^* (x) L -> det E (x) S F^* + det F^* (x) S E
      -> wedge^{e-1} E (x) wedge^{e-1} F^* -> O

where S is the Schur functor of the hook partition (2, 1^{e-2}).  On bases
the chain is 0 -> R -> Hom(F,E) -> W -> Hom(E,F) -> R with

    d4(1) = adj(M)
    d3(X) = (X M, M X)                  in W
    d2(A, B) = M A - B M
    d1(Y) = trace(adj(M) Y)

and W = {(A, B) in End E + End F : tr A = tr B} / <(Id, Id)>.
"""

from __future__ import annotations

import itertools
import random
from collections import Counter
from dataclasses import dataclass

from gnegard.bundles import SplitBundle
from gnegard.groebner import Ideal
from gnegard.matrix import GradedMatrix, adjugate, minors, random_form
from gnegard.poly import PolyRing, projective_ring
from gnegard.saturation import saturate


def hook_partition(e: int) -> tuple:
    """The partition (2, 1^{e-2}), conjugate to (e-1, 1)."""
    return (2,) + (1,) * (e - 2)


def semistandard_tableaux(shape, n: int):
    """Yield all semistandard tableaux of ``shape`` with entries 1..n, as row lists."""
    cells = [(i, j) for i, row in enumerate(shape) for j in range(row)]
    filling = {}

    def rec(k):
        if k == len(cells):
            yield [[filling[(i, j)] for j in range(row)] for i, row in enumerate(shape)]
            return
        i, j = cells[k]
        lo = 1
        if j > 0:
            lo = max(lo, filling[(i, j - 1)])
        if i > 0:
            lo = max(lo, filling[(i - 1, j)] + 1)
        for v in range(lo, n + 1):
            filling[(i, j)] = v
            yield from rec(k + 1)
        filling.pop((i, j), None)

    yield from rec(0)


def schur_term(bundle, e: int) -> list:
    """Twists of S_{(2,1^{e-2})} applied to a split bundle of rank e.

    Each semistandard tableau T contributes the line bundle of weight
    sum over cells of twist[T(cell) - 1].
    """
    twists = bundle.twists if isinstance(bundle, SplitBundle) else tuple(sorted(bundle))
    if len(twists) != e:
        raise ValueError("bundle of rank %d, expected %d" % (len(twists), e))
    if e < 3:
        raise ValueError("rank must be at least 3")
    out = []
    for T in semistandard_tableaux(hook_partition(e), e):
        out.append(sum(twists[v - 1] for row in T for v in row))
    return sorted(out)


def schur_term_jacobi_trudi(bundle, e: int) -> list:
    """Same multiset via s_{(2,1^{e-2})} = e_1 e_{e-1} - e_e on the twist monomials."""
    twists = bundle.twists if isinstance(bundle, SplitBundle) else tuple(sorted(bundle))
    if len(twists) != e:
        raise ValueError("bundle of rank %d, expected %d" % (len(twists), e))

    def elem(k):
        return Counter(sum(c) for c in itertools.combinations(twists, k))

    prod = Counter()
    for a, u in elem(1).items():
        for b, v in elem(e - 1).items():
            prod[a + b] += u * v
    prod.subtract(elem(e))
    if any(v < 0 for v in prod.values()):
        raise ArithmeticError("negative multiplicity in Jacobi-Trudi expansion")
    return sorted(itertools.chain.from_iterable([a] * v for a, v in prod.items()))


class ComplexShape:
    """Terms of a complex of split bundles, term i as a sorted twist list."""

    def __init__(self, terms):
        self.terms = [tuple(sorted(t)) for t in terms]

    def ranks(self) -> list:
        return [len(t) for t in self.terms]

    def __eq__(self, other):
        return isinstance(other, ComplexShape) and self.terms == other.terms

    def __hash__(self):
        return hash(tuple(self.terms))

    def dual_shifted(self, s: int) -> ComplexShape:
        """Reverse the terms, dualize, and twist by O(s)."""
        return ComplexShape([[-a + s for a in t] for t in reversed(self.terms)])

    def to_json(self) -> list:
        return [[[a, n] for a, n in sorted(Counter(t).items(), reverse=True)] for t in self.terms]

    @staticmethod
    def _term_str(t) -> str:
        parts = []
        for a, n in sorted(Counter(t).items(), reverse=True):
            tw = "" if a == 0 else "(%d)" % a
            parts.append("O%s%s" % ("" if n == 1 else "^%d" % n, tw))
        return " + ".join(parts) if parts else "0"

    def __str__(self):
        return " -> ".join(["0"] + [self._term_str(t) for t in reversed(self.terms)])

    def __repr__(self):
        return "ComplexShape(%s)" % self


def line_bundle_L(E, F) -> int:
    """c_1(L) with L = det E (x) (det F)^-1."""
    return E.c1 - F.c1


def gn_shape(E: SplitBundle, F: SplitBundle) -> ComplexShape:
    e = E.rank
    if F.rank != e:
        raise ValueError("E and F must have the same rank")
    if e < 3:
        raise ValueError("rank must be at least 3")
    cL = line_bundle_L(E, F)
    t1 = [a + b for a in E.exterior(e - 1) for b in F.dual().exterior(e - 1)]
    t2 = [E.c1 + s for s in schur_term(F.dual(), e)] + [-F.c1 + s for s in schur_term(E, e)]
    t3 = [a - b + cL for a in E.twists for b in F.twists]
    t4 = [2 * cL]
    return ComplexShape([[0], t1, t2, t3, t4])


def check_self_duality(shape: ComplexShape, cL: int) -> bool:
    """The dual complex twisted by L^2 has the same terms."""
    return shape.dual_shifted(2 * cL) == shape


@dataclass
class GNDifferentials:
    d1: GradedMatrix
    d2: GradedMatrix
    d3: GradedMatrix
    d4: GradedMatrix

    def maps(self):
        return [self.d1, self.d2, self.d3, self.d4]

    def compositions_vanish(self) -> bool:
        ds = self.maps()
        return all((ds[i] * ds[i + 1]).is_zero() for i in range(3))

    def shape(self) -> ComplexShape:
        terms = [[-d for d in self.d1.row_degrees]]
        terms += [[-d for d in m.col_degrees] for m in self.maps()]
        return ComplexShape(terms)


def w_basis(e: int) -> list:
    """Labels of the chosen basis of W.

    ("A", k, j), k != j   off-diagonal entry of the End E part
    ("B", i, k), i != k   off-diagonal entry of the End F part
    ("a", k), k < e-1     a_kk - a_{e-1,e-1}
    ("b", k), k < e-1     b_kk - a_{e-1,e-1}
    """
    out = [("A", k, j) for k in range(e) for j in range(e) if k != j]
    out += [("B", i, k) for i in range(e) for k in range(e) if i != k]
    out += [("a", k) for k in range(e - 1)]
    out += [("b", k) for k in range(e - 1)]
    return out


def gn_differentials(M: GradedMatrix) -> GNDifferentials:
    """Differentials of the GN complex in the elementary bases.

    Basis of Hom(E, F): Y_ij at index i*e + j (i indexes F, j indexes E);
    basis of Hom(F, E): X_jl at index j*e + l.
    """
    e = M.nrows
    if M.ncols != e:
        raise ValueError("the GN complex needs a square matrix")
    if e < 3:
        raise ValueError("size must be at least 3")
    ring = M.ring
    zero = ring.zero()
    r = M.row_degrees
    c = M.col_degrees
    D = sum(c) - sum(r)
    adj = adjugate(M)
    A = M.entries

    # d1 : Hom(E,F) -> R
    hom_EF = [D + r[i] - c[j] for i in range(e) for j in range(e)]
    d1 = GradedMatrix(ring, [[adj.entries[j][i] for i in range(e) for j in range(e)]],
                      [0], hom_EF)

    # d2 : W -> Hom(E,F)
    labels = w_basis(e)
    w_deg = []
    cols = []
    for lab in labels:
        col = [zero] * (e * e)
        if lab[0] == "A":
            _, k, j = lab
            w_deg.append(D - c[j] + c[k])
            for i in range(e):
                col[i * e + j] = col[i * e + j] + A[i][k]
        elif lab[0] == "B":
            _, i, k = lab
            w_deg.append(D - r[k] + r[i])
            for j in range(e):
                col[i * e + j] = col[i * e + j] - A[k][j]
        elif lab[0] == "a":
            k = lab[1]
            w_deg.append(D)
            # representative (E_kk, E_{e-1,e-1})
            for i in range(e):
                col[i * e + k] = col[i * e + k] + A[i][k]
            for j in range(e):
                col[(e - 1) * e + j] = col[(e - 1) * e + j] - A[e - 1][j]
        else:
            k = lab[1]
            w_deg.append(D)
            # representative (0, E_kk - E_{e-1,e-1})
            for j in range(e):
                col[k * e + j] = col[k * e + j] - A[k][j]
                col[(e - 1) * e + j] = col[(e - 1) * e + j] + A[e - 1][j]
        cols.append(col)
    d2 = GradedMatrix(ring, [[cols[b][a] for b in range(len(labels))] for a in range(e * e)],
                      hom_EF, w_deg)

    # d3 : Hom(F,E) -> W, X_jl -> coordinates of (E_jl M, M E_jl)
    hom_FE = [D - r[l] + c[j] for j in range(e) for l in range(e)]
    index = {lab: n for n, lab in enumerate(labels)}
    rows = [[zero] * (e * e) for _ in labels]
    for j in range(e):
        for l in range(e):
            x = j * e + l
            # X M = E_jl M has row j equal to row l of M
            for k in range(e):
                if k != j:
                    rows[index[("A", j, k)]][x] = A[l][k]
            # M X = M E_jl has column l equal to column j of M
            for i in range(e):
                if i != l:
                    rows[index[("B", i, l)]][x] = A[i][j]
            corner = A[l][e - 1] if j == e - 1 else zero
            for k in range(e - 1):
                xm_kk = A[l][k] if j == k else zero
                mx_kk = A[k][j] if l == k else zero
                rows[index[("a", k)]][x] = xm_kk - corner
                rows[index[("b", k)]][x] = mx_kk - corner
    d3 = GradedMatrix(ring, rows, w_deg, hom_FE)

    # d4 : R -> Hom(F,E), 1 -> adj(M)
    d4 = GradedMatrix(ring, [[adj.entries[j][l]] for j in range(e) for l in range(e)],
                      hom_FE, [2 * D])
    return GNDifferentials(d1, d2, d3, d4)


def gn_ideal(M: GradedMatrix) -> Ideal:
    """Ideal of the (e-1) x (e-1) minors of a square matrix."""
    if M.nrows != M.ncols:
        raise ValueError("the GN ideal needs a square matrix")
    return Ideal(M.ring, minors(M, M.nrows - 1))


@dataclass
class EulerConstruction:
    matrix: GradedMatrix
    ideal: Ideal
    saturated: Ideal


def euler_matrix(ring: PolyRing, E: SplitBundle, seed=None) -> GradedMatrix:
    """The (r+1) x (r+1) matrix [Phi | x] for a map E -> T_P^r.

    Phi : E -> O(1)^{r+1} is a seeded random lift; the last column is the
    Euler vector (x_0, ..., x_r).  The map E -> T drops rank exactly where
    [Phi | x] does.
    """
    r = ring.nvars - 1
    if E.rank != r:
        raise ValueError("the tangent construction needs rank(E) = r = %d" % r)
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    rows = []
    for i in range(r + 1):
        row = [random_form(ring, 1 - a, rng) if a <= 1 else ring.zero() for a in E.twists]
        row.append(ring.var(i))
        rows.append(row)
    return GradedMatrix(ring, rows, [-1] * (r + 1), [-a for a in E.twists] + [0])


def euler_construction(E: SplitBundle, r: int, seed=None, p=None, method="elimination"):
    """Degeneracy locus of a generic E -> T_P^r, saturated."""
    ring = projective_ring(r) if p is None else projective_ring(r, p)
    M = euler_matrix(ring, E, seed)
    I = Ideal(ring, minors(M, r))
    return EulerConstruction(M, I, saturate(I, method))
