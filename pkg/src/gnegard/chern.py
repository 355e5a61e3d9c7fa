"""Truncated Chern class calculus on P^r.

A Chern series is a polynomial in the hyperplane class h truncated above
degree r, with exact rational coefficients.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from gnegard.bundles import SplitBundle, TangentBundle


class ChernSeries:
    """c_0 + c_1 h + ... + c_r h^r in Q[h]/(h^(r+1))."""

    def __init__(self, coefficients, r: int):
        if r < 0:
            raise ValueError("r must be non-negative")
        coeffs = [Fraction(c) for c in list(coefficients)[: r + 1]]
        coeffs += [Fraction(0)] * (r + 1 - len(coeffs))
        self.coefficients = tuple(coeffs)
        self.r = r

    @classmethod
    def one(cls, r: int) -> ChernSeries:
        return cls([1], r)

    def __getitem__(self, i: int) -> Fraction:
        return self.coefficients[i] if 0 <= i <= self.r else Fraction(0)

    def _check(self, other):
        if not isinstance(other, ChernSeries) or other.r != self.r:
            raise ValueError("Chern series truncated at different degrees")

    def __mul__(self, other: ChernSeries) -> ChernSeries:
        self._check(other)
        out = [Fraction(0)] * (self.r + 1)
        for i, a in enumerate(self.coefficients):
            if a:
                for j in range(self.r + 1 - i):
                    out[i + j] += a * other.coefficients[j]
        return ChernSeries(out, self.r)

    def __truediv__(self, other: ChernSeries) -> ChernSeries:
        return quotient_series(self, other)

    def __eq__(self, other):
        return (isinstance(other, ChernSeries) and self.r == other.r
                and self.coefficients == other.coefficients)

    def __hash__(self):
        return hash((self.coefficients, self.r))

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coefficients):
            if c:
                terms.append(str(c) if i == 0 else "%s*h^%d" % (c, i))
        return "ChernSeries(%s)" % (" + ".join(terms) or "0")


def chern_of_split(bundle, r: int) -> ChernSeries:
    """Product of (1 + a h) over the twists, truncated at h^r."""
    twists = bundle.twists if isinstance(bundle, SplitBundle) else tuple(bundle)
    out = ChernSeries.one(r)
    for a in twists:
        out = out * ChernSeries([1, a], r)
    return out


def chern_of_tangent(r: int) -> ChernSeries:
    """(1 + h)^(r+1) truncated at h^r, from the Euler sequence."""
    return ChernSeries([comb(r + 1, k) for k in range(r + 1)], r)


def chern_of(bundle, r: int) -> ChernSeries:
    if isinstance(bundle, TangentBundle):
        if bundle.r != r:
            raise ValueError("tangent bundle of P^%d used on P^%d" % (bundle.r, r))
        return chern_of_tangent(r)
    return chern_of_split(bundle, r)


def quotient_series(num: ChernSeries, den: ChernSeries) -> ChernSeries:
    """Truncated power series num / den; requires den[0] = 1."""
    num._check(den)
    if den[0] != 1:
        raise ValueError("denominator must have constant term 1")
    r = num.r
    q = [Fraction(0)] * (r + 1)
    for k in range(r + 1):
        q[k] = num[k] - sum(den[j] * q[k - j] for j in range(1, k + 1))
    return ChernSeries(q, r)


def porteous_degree(q: ChernSeries) -> int:
    """Degree c_2^2 - c_1 c_3 of the locus where a map of equal-rank bundles
    drops rank by two, from the quotient series c(F)/c(E)."""
    d = q[2] ** 2 - q[1] * q[3]
    if d.denominator != 1:
        raise ValueError("non-integral degree %s: inconsistent Chern data" % d)
    return int(d)


def degeneracy_degree(E, F, r: int) -> int:
    return porteous_degree(quotient_series(chern_of(F, r), chern_of(E, r)))


def canonical_twist(E, F, r: int) -> int:
    """k with omega_X = O_X(k): k = -2 (c_1(E) - c_1(F)) - r - 1."""
    return -2 * (E.c1 - F.c1) - r - 1
