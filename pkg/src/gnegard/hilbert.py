"""Hilbert series, Hilbert polynomials, dimension and degree."""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

import numpy as np

from gnegard.linalg import rank_mod_p


class HilbertPolynomial:
    """Polynomial in one variable with exact rational coefficients, constant term first."""

    def __init__(self, coefficients):
        coeffs = [Fraction(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coefficients = tuple(coeffs)

    @classmethod
    def binomial(cls, a: int, m: int) -> HilbertPolynomial:
        """The polynomial x -> C(x + a, m)."""
        poly = [Fraction(1)]
        for i in range(m):
            # multiply by (x + a - i) / (i + 1)
            c0 = Fraction(a - i, i + 1)
            c1 = Fraction(1, i + 1)
            nxt = [Fraction(0)] * (len(poly) + 1)
            for k, v in enumerate(poly):
                nxt[k] += v * c0
                nxt[k + 1] += v * c1
            poly = nxt
        return cls(poly)

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial (empty scheme)."""
        return len(self.coefficients) - 1

    def leading_coefficient(self) -> Fraction:
        return self.coefficients[-1] if self.coefficients else Fraction(0)

    def __call__(self, x) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def __add__(self, other):
        n = max(len(self.coefficients), len(other.coefficients))
        a = list(self.coefficients) + [0] * (n - len(self.coefficients))
        b = list(other.coefficients) + [0] * (n - len(other.coefficients))
        return HilbertPolynomial([u + v for u, v in zip(a, b)])

    def __neg__(self):
        return HilbertPolynomial([-c for c in self.coefficients])

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> HilbertPolynomial:
        return HilbertPolynomial([c * v for v in self.coefficients])

    def shifted(self, s: int) -> HilbertPolynomial:
        """The polynomial x -> P(x + s)."""
        out = HilbertPolynomial([])
        for k, c in enumerate(self.coefficients):
            if c:
                # (x + s)^k
                out = out + HilbertPolynomial([c * comb(k, i) * s ** (k - i) for i in range(k + 1)])
        return out

    def difference(self) -> HilbertPolynomial:
        """P(x) - P(x - 1): the Hilbert polynomial of a hyperplane section."""
        return self - self.shifted(-1)

    def scheme_degree(self) -> int:
        """Leading coefficient times (degree)!."""
        if not self.coefficients:
            return 0
        d = self.leading_coefficient() * factorial(self.degree)
        if d.denominator != 1:
            raise ValueError("non-integral degree %s" % d)
        return int(d)

    def __eq__(self, other):
        if not isinstance(other, HilbertPolynomial):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self):
        return hash(self.coefficients)

    def as_strings(self) -> list:
        return [str(c) for c in self.coefficients]

    def __str__(self):
        if not self.coefficients:
            return "0"
        parts = []
        for k in range(len(self.coefficients) - 1, -1, -1):
            c = self.coefficients[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if k == 0:
                body = str(a) if a.denominator == 1 else "%s" % a
            else:
                if a == 1:
                    cs = ""
                elif a.denominator == 1:
                    cs = str(a)
                else:
                    cs = "(%s)" % a
                body = cs + ("x" if k == 1 else "x^%d" % k)
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += " %s %s" % (sign, body)
        return out

    def __repr__(self):
        return "HilbertPolynomial(%s)" % self


# -- monomial ideals -------------------------------------------------------

def _divides(a, b):
    return all(u <= v for u, v in zip(a, b))


def minimalize(monomials) -> list:
    """Minimal generators of a monomial ideal given by exponent tuples."""
    out = []
    for m in sorted(set(monomials), key=sum):
        if not any(_divides(g, m) for g in out):
            out.append(m)
    return out


def _padd(a, b):
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]


def _pmul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, u in enumerate(a):
        if u:
            for j, v in enumerate(b):
                out[i + j] += u * v
    return out


def _trim(a):
    a = list(a)
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return a


def _numerator(gens) -> list:
    if not gens:
        return [1]
    if not any(gens[0]):
        return [0]
    nvars = len(gens[0])
    counts = [0] * nvars
    for g in gens:
        for i, a in enumerate(g):
            if a:
                counts[i] += 1
    if max(counts) <= 1:
        # pairwise coprime generators: a complete intersection of monomials
        out = [1]
        for g in gens:
            d = sum(g)
            out = _pmul(out, [1] + [0] * (d - 1) + [-1])
        return out
    var = max(range(nvars), key=lambda i: counts[i])
    # exponents from generators that are not pure powers of var, so x^k is
    # not already in the ideal and both branches strictly enlarge it
    exps = sorted(g[var] for g in gens if g[var] and sum(g) > g[var])
    k = exps[len(exps) // 2]
    pivot = tuple(k if i == var else 0 for i in range(nvars))
    plus = minimalize([g for g in gens if g[var] < k] + [pivot])
    colon = minimalize([tuple(max(a - k, 0) if i == var else a for i, a in enumerate(g))
                        for g in gens])
    return _trim(_padd(_numerator(plus), [0] * k + _numerator(colon)))


def hilbert_numerator(monomials, nvars: int) -> list:
    """Numerator N(t) of the Hilbert series N(t)/(1-t)^nvars of R/(monomials).

    Pivot recursion: H(I) = H(I + x^k) + t^k H(I : x^k) on numerators.
    """
    gens = minimalize(tuple(m) for m in monomials)
    if gens and len(gens[0]) != nvars:
        raise ValueError("exponent vectors have the wrong length")
    return _trim(_numerator(gens))


def reduced_series(numerator, nvars: int):
    """Write N(t)/(1-t)^n as Q(t)/(1-t)^d with Q(1) != 0; returns (Q, d)."""
    q = list(numerator)
    d = nvars
    while d > 0 and sum(q) == 0 and any(q):
        # divide by (1 - t): synthetic division
        out = []
        acc = 0
        for c in q[:-1]:
            acc += c
            out.append(acc)
        q = _trim(out) if out else [0]
        d -= 1
    return q, d


def hilbert_polynomial_from_numerator(numerator, nvars: int) -> HilbertPolynomial:
    q, d = reduced_series(numerator, nvars)
    if d == 0 or not any(q):
        return HilbertPolynomial([])
    out = HilbertPolynomial([])
    for k, c in enumerate(q):
        if c:
            out = out + HilbertPolynomial.binomial(d - 1 - k, d - 1).scale(c)
    return out


def series_coefficient(numerator, nvars: int, degree: int) -> int:
    """Coefficient of t^degree in N(t)/(1-t)^nvars."""
    total = 0
    for k, c in enumerate(numerator):
        m = degree - k
        if m >= 0 and c:
            total += c * comb(m + nvars - 1, nvars - 1)
    return total


# -- ideals ----------------------------------------------------------------

def hilbert_series(ideal) -> list:
    """Hilbert series numerator of R/I over (1-t)^(r+1), via leading monomials."""
    if not ideal.is_homogeneous():
        raise ValueError("Hilbert series needs a homogeneous ideal")
    return hilbert_numerator(ideal.leading_monomials(), ideal.nvars)


def hilbert_polynomial(ideal) -> HilbertPolynomial:
    return hilbert_polynomial_from_numerator(hilbert_series(ideal), ideal.nvars)


def hilbert_function(ideal, degree: int) -> int:
    return series_coefficient(hilbert_series(ideal), ideal.nvars, degree)


def krull_dimension(ideal) -> int:
    return reduced_series(hilbert_series(ideal), ideal.nvars)[1]


def codimension(ideal) -> int:
    """Codimension of the projective scheme V(I) in P^r.

    Raises ``ValueError`` when the scheme is empty (I is m-primary or the
    unit ideal).
    """
    r = ideal.nvars - 1
    hp = hilbert_polynomial(ideal)
    if hp.degree < 0:
        raise ValueError("empty scheme: the ideal is irrelevant or the unit ideal")
    return r - hp.degree


def degree(ideal) -> int:
    """Degree of the projective scheme: leading coefficient of HP times dim!."""
    return hilbert_polynomial(ideal).scheme_degree()


def hilbert_function_bruteforce(ring, generators, degree: int) -> int:
    """dim (R/I)_degree by linear algebra on the span of monomial multiples.

    Does not use a Groebner basis: it ranks the matrix of all products
    m * g with deg m + deg g = degree.
    """
    cols = ring.monomials(degree)
    if not cols:
        return 0
    index = {m: i for i, m in enumerate(cols)}
    rows = []
    for g in generators:
        dg = g.degree()
        if dg is None or dg > degree:
            continue
        for m in ring.monomials(degree - dg):
            row = np.zeros(len(cols), dtype=np.int64)
            for k, c in g.terms.items():
                row[index[k + m]] = c
            rows.append(row)
    if not rows:
        return len(cols)
    return len(cols) - rank_mod_p(np.array(rows), ring.p)
