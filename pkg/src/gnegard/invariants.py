"""Numerical invariants of a subscheme of P^r from its resolution and ideal."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from gnegard.complex import ComplexShape
from gnegard.hilbert import HilbertPolynomial


class CrossCheckError(RuntimeError):
    """Two independent routes to the same invariant disagree."""


class CohomologyHypothesisError(ValueError):
    """The twists of a complex do not separate its cohomology strands."""


def hp_from_shape(shape: ComplexShape, r: int) -> HilbertPolynomial:
    """Alternating sum over the terms of sum_a C(x + a + r, r)."""
    out = HilbertPolynomial([])
    for i, term in enumerate(shape.terms):
        for a in term:
            b = HilbertPolynomial.binomial(a + r, r)
            out = out + b if i % 2 == 0 else out - b
    return out


def sectional_genus(P: HilbertPolynomial) -> int:
    """Arithmetic genus of a curve section: difference down to d x + c, return 1 - c."""
    n = P.degree
    if n < 1:
        raise ValueError("sectional genus needs a Hilbert polynomial of degree >= 1")
    curve = P
    for _ in range(n - 1):
        curve = curve.difference()
    g = 1 - curve(0)
    if g.denominator != 1:
        raise ValueError("non-integral genus %s" % g)
    return int(g)


def line_bundle_cohomology(a: int, r: int) -> list:
    """[h^0, ..., h^r] of O(a) on P^r."""
    h = [0] * (r + 1)
    if a >= 0:
        h[0] = comb(a + r, r)
    if a <= -r - 1:
        h[r] = comb(-a - 1, r)
    return h


def structure_sheaf_cohomology(shape: ComplexShape, r: int) -> list:
    """[h^0, ..., h^n] of O_X from a resolution by sums of line bundles.

    Only h^0 of term 0 and h^r of the terms may be nonzero; h^r of term i
    lands in degree r - i.  The answer is forced by ranks only when at most
    one term has h^r, which is checked.
    """
    length = len(shape.terms) - 1
    n = r - length
    if n < 0:
        raise ValueError("resolution longer than the ambient dimension")
    h = [0] * (n + 1)
    top_terms = []
    for i, term in enumerate(shape.terms):
        for a in term:
            hc = line_bundle_cohomology(a, r)
            if hc[0] and i != 0:
                raise CohomologyHypothesisError("term %d has sections (twist %d)" % (i, a))
            if i == 0:
                h[0] += hc[0]
            if r > 0 and hc[r]:
                deg = r - i
                if not 0 <= deg <= n:
                    raise CohomologyHypothesisError(
                        "h^%d of term %d would land in degree %d" % (r, i, deg))
                top_terms.append(i)
                h[deg] += hc[r]
    if len(set(top_terms)) > 1:
        raise CohomologyHypothesisError("top cohomology in several terms %s" % sorted(set(top_terms)))
    return h


@dataclass
class SurfaceDiamond:
    euler_number: int
    b1: int
    b2: int
    h11: int
    pg: int
    q: int

    def rows(self) -> list:
        return [[1], [self.q, self.q], [self.pg, self.h11, self.pg], [self.q, self.q], [1]]


def surface_diamond(chi: int, K2: int, pg: int, q: int) -> SurfaceDiamond:
    """Hodge numbers of a smooth surface from chi(O), K^2, p_g and q (Noether)."""
    e = 12 * chi - K2
    b1 = 2 * q
    b2 = e - 2 + 2 * b1
    h11 = b2 - 2 * pg
    if e < 0 or b2 < 0 or h11 < 0:
        raise ValueError("inconsistent surface invariants (e=%d, b2=%d, h11=%d)" % (e, b2, h11))
    assert b2 == 2 * pg + h11
    assert e == 2 - 2 * b1 + b2
    return SurfaceDiamond(e, b1, b2, h11, pg, q)


def diamond_text(rows) -> str:
    """Centered diamond; entries may be ints or strings such as 'h11'."""
    cells = [[str(v) for v in row] for row in rows]
    w = max(len(c) for row in cells for c in row) + 2
    n = max(len(row) for row in cells)
    lines = []
    for row in cells:
        pad = (n - len(row)) * w // 2
        lines.append(" " * pad + "".join(c.center(w) for c in row).rstrip())
    return "\n".join(lines)


@dataclass
class InvariantReport:
    preset: str
    r: int
    prime: int
    seed: int
    mode: str
    dimension: int
    degree: int
    hilbert_polynomial: HilbertPolynomial
    canonical_twist: int
    chi: int
    sectional_genus: int | None = None
    h_zero: list | None = None
    pg: int | None = None
    q: int | None = None
    K2: int | None = None
    diamond: dict | None = None
    betti: object = None
    shape: ComplexShape | None = None
    generator_degrees: list | None = None
    checks: list = field(default_factory=list)
    flags: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c["pass"] for c in self.checks)

    def check(self, name: str, ok: bool):
        self.checks.append({"name": name, "pass": bool(ok)})


def _num(v, source="computed"):
    return {"value": v, "source": source}


def report_to_json(rep: InvariantReport) -> dict:
    """JSON-ready dict; every numeric field is tagged with its source."""
    hp = [[c.numerator, c.denominator] for c in rep.hilbert_polynomial.coefficients]
    out = {
        "schemaVersion": 1,
        "preset": rep.preset,
        "r": rep.r,
        "prime": rep.prime,
        "seed": rep.seed,
        "mode": rep.mode,
        "degree": _num(rep.degree),
        "dimension": _num(rep.dimension),
        "hilbertPolynomial": _num(hp),
        "hilbertPolynomialText": str(rep.hilbert_polynomial),
        "sectionalGenus": _num(rep.sectional_genus),
        "chiO": _num(rep.chi),
        "hZero": _num(rep.h_zero),
        "pg": _num(rep.pg),
        "q": _num(rep.q),
        "Ksquared": _num(rep.K2),
        "canonicalTwist": _num(rep.canonical_twist),
        "diamond": rep.diamond if rep.diamond is not None else "unknown",
        "checks": rep.checks,
        "flags": rep.flags,
    }
    if rep.shape is not None:
        out["shape"] = rep.shape.to_json()
    if rep.generator_degrees is not None:
        out["generatorDegrees"] = _num(rep.generator_degrees)
    if rep.betti is not None:
        out["bettiTable"] = _num(rep.betti.to_json())
    return out


def cohomology_from_hp(chi: int, n: int):
    """h^i(O_X) for a connected curve from chi alone: (1, 1 - chi)."""
    if n != 1:
        raise ValueError("only curves are handled")
    return [1, 1 - chi]


def assemble_report(*, preset, r, prime, seed, mode, degree, canonical_twist,
                    hp_ideal=None, shape=None, codim=None, betti=None,
                    generator_degrees=None, h21_annotation=None, flags=(),
                    shape_r=None) -> InvariantReport:
    """Combine ideal-derived and shape-derived data into a cross-checked report.

    ``degree`` is the Porteous degree.  Disagreement between the Hilbert
    polynomials computed from the ideal and from the shape raises
    :class:`CrossCheckError`.  ``shape_r`` is the ambient dimension of the
    resolution when it lives in a smaller linear span than P^r.
    """
    shape_r = r if shape_r is None else shape_r
    hp_shape = hp_from_shape(shape, shape_r) if shape is not None else None
    if hp_ideal is not None and hp_shape is not None and hp_ideal != hp_shape:
        raise CrossCheckError("Hilbert polynomial from the ideal (%s) differs from the "
                              "resolution shape (%s); the sample may not be generic"
                              % (hp_ideal, hp_shape))
    hp = hp_ideal if hp_ideal is not None else hp_shape
    if hp is None:
        raise ValueError("need an ideal or a shape")
    n = hp.degree
    rep = InvariantReport(preset=preset, r=r, prime=prime, seed=seed, mode=mode,
                          dimension=n, degree=hp.scheme_degree(), hilbert_polynomial=hp,
                          canonical_twist=canonical_twist, chi=int(hp(0)),
                          shape=shape, betti=betti, generator_degrees=generator_degrees,
                          flags=list(flags))
    rep.check("porteous degree = Hilbert polynomial degree", rep.degree == degree)
    if codim is not None:
        rep.check("codimension 4", codim == 4)
    if hp_ideal is not None and hp_shape is not None:
        rep.check("Hilbert polynomial: ideal = resolution shape", True)
    if n >= 1:
        rep.sectional_genus = sectional_genus(hp)
    if shape is not None:
        rep.check("self-dual shape", shape.dual_shifted(shape.terms[-1][0]) == shape)
        try:
            rep.h_zero = structure_sheaf_cohomology(shape, shape_r)
        except CohomologyHypothesisError as exc:
            rep.flags.append("structure sheaf cohomology not determined: %s" % exc)
    if rep.h_zero is None and n == 1:
        rep.h_zero = cohomology_from_hp(rep.chi, n)
        rep.flags.append("curve cohomology from chi, assuming X connected")
    if betti is not None and shape is not None and shape_r == r:
        rep.check("Betti table = resolution shape", betti.twists() == [list(t) for t in shape.terms])
    if rep.h_zero is not None:
        alt = sum((-1) ** i * v for i, v in enumerate(rep.h_zero))
        rep.check("chi(O) = alternating sum of h^i(O)", alt == rep.chi)
        if n >= 1:
            rep.pg = rep.h_zero[n]
            rep.q = rep.h_zero[1]
    if n == 2:
        rep.K2 = canonical_twist ** 2 * rep.degree
        if canonical_twist == 1:
            rep.check("canonical surface: K^2 = degree", rep.K2 == rep.degree)
        if rep.pg is not None:
            sd = surface_diamond(rep.chi, rep.K2, rep.pg, rep.q)
            rep.diamond = {"rows": sd.rows(), "eulerNumber": sd.euler_number,
                           "h11": _num(sd.h11), "source": "computed"}
    elif n == 1 and rep.h_zero is not None:
        g = rep.h_zero[1]
        rep.diamond = {"rows": [[1], [g, g], [1]], "source": "computed"}
    elif n == 3 and canonical_twist == 0 and rep.h_zero is not None:
        row = rep.h_zero
        rep.diamond = {
            "structureRow": _num(row),
            "h11": {"value": "unknown", "source": "not computed"},
            "h21": ({"value": h21_annotation, "source": "paper-annotation"}
                    if h21_annotation is not None else {"value": "unknown", "source": "not computed"}),
            "rows": [[1], [0, 0], [0, "h11", 0], [1, "h21", "h21", 1], [0, "h11", 0], [0, 0], [1]],
        }
    rep.flags.append("smoothness assumed (generic)")
    return rep

