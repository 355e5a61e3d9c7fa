"""Sparse multivariate polynomials over a prime field.

Monomials are packed into a single Python int whose integer order *is* the
monomial order.  For exponent vector ``a`` the key is::

    sum_k (w_k . a) << (EB + WB*(K-1-k))  -  sum_i a_i << (EW*i)

where ``w_k`` are the rows of the weight matrix and the subtracted part packs
the exponents with the last variable most significant.  The subtracted part
breaks ties in reverse lexicographic fashion, so a single all-ones weight row
gives graded reverse lexicographic order.  Keys are additive: multiplying
monomials adds keys.
"""

from __future__ import annotations

import itertools
from math import comb

from gnegard.field import DEFAULT_PRIME, inverse, is_prime

EW = 8  # bits per exponent field
MAX_EXP = (1 << (EW - 1)) - 1
WB = 24  # bits per weight field


class PolyRing:
    """Polynomial ring F_p[x_0, ..., x_{n-1}] with a fixed monomial order.

    ``weights`` is a list of non-negative integer rows; ties are broken by
    reverse lexicographic order.  The default single all-ones row is grevlex.
    """

    def __init__(self, nvars, p=DEFAULT_PRIME, weights=None, names=None):
        if nvars < 1:
            raise ValueError("need at least one variable")
        if not is_prime(p):
            raise ValueError("%d is not prime" % p)
        self.nvars = nvars
        self.p = p
        if weights is None:
            weights = [(1,) * nvars]
        self.weights = tuple(tuple(int(w) for w in row) for row in weights)
        if any(len(row) != nvars for row in self.weights):
            raise ValueError("weight rows must have one entry per variable")
        if any(w < 0 for row in self.weights for w in row):
            raise ValueError("weights must be non-negative")
        for i in range(nvars):
            if not any(row[i] for row in self.weights):
                raise ValueError("variable %d has zero weight in every row" % i)
        self.names = tuple(names) if names else tuple("x%d" % i for i in range(nvars))
        self.EB = EW * nvars
        self.EMASK = (1 << self.EB) - 1
        self.GUARD = sum(1 << (EW * i + EW - 1) for i in range(nvars))
        K = len(self.weights)
        self._wshift = [self.EB + WB * (K - 1 - k) for k in range(K)]
        # key of each variable
        self._var_keys = [self.mono(tuple(int(i == j) for j in range(nvars)))
                          for i in range(nvars)]
        self.graded = self.weights[0] == (1,) * nvars

    # -- monomials ---------------------------------------------------------

    def mono(self, exps) -> int:
        if len(exps) != self.nvars:
            raise ValueError("exponent vector has wrong length")
        key = 0
        for row, sh in zip(self.weights, self._wshift):
            key += sum(w * a for w, a in zip(row, exps)) << sh
        e = 0
        for i, a in enumerate(exps):
            if a < 0 or a > MAX_EXP:
                raise ValueError("exponent %d out of range" % a)
            e |= a << (EW * i)
        return key - e

    def exps(self, key: int) -> tuple:
        e = (-key) & self.EMASK
        return tuple((e >> (EW * i)) & 0xFF for i in range(self.nvars))

    def mdeg(self, key: int) -> int:
        """Total degree of a monomial key."""
        if self.graded:
            return (key + ((-key) & self.EMASK)) >> self._wshift[0]
        return sum(self.exps(key))

    def mdivides(self, a: int, b: int) -> bool:
        ea = (-a) & self.EMASK
        eb = (-b) & self.EMASK
        return ((eb | self.GUARD) - ea) & self.GUARD == self.GUARD

    def mlcm(self, a: int, b: int) -> int:
        return self.mono(tuple(max(u, v) for u, v in zip(self.exps(a), self.exps(b))))

    def mcoprime(self, a: int, b: int) -> bool:
        return all(u == 0 or v == 0 for u, v in zip(self.exps(a), self.exps(b)))

    def monomials(self, degree: int):
        """All monomial keys of the given total degree, in descending order."""
        out = []
        for combo in itertools.combinations_with_replacement(range(self.nvars), degree):
            a = [0] * self.nvars
            for i in combo:
                a[i] += 1
            out.append(self.mono(tuple(a)))
        out.sort(reverse=True)
        return out

    def dim(self, degree: int) -> int:
        """Number of monomials of the given degree."""
        if degree < 0:
            return 0
        return comb(degree + self.nvars - 1, self.nvars - 1)

    # -- constructors ------------------------------------------------------

    def zero(self) -> Poly:
        return Poly(self, {})

    def one(self) -> Poly:
        return Poly(self, {0: 1})

    def const(self, c: int) -> Poly:
        c %= self.p
        return Poly(self, {0: c} if c else {})

    def var(self, i: int) -> Poly:
        return Poly(self, {self._var_keys[i]: 1})

    def gens(self):
        return [self.var(i) for i in range(self.nvars)]

    def from_terms(self, terms) -> Poly:
        """Build a polynomial from ``{exponent tuple: coefficient}``."""
        d = {}
        p = self.p
        for a, c in dict(terms).items():
            k = self.mono(tuple(a))
            v = (d.get(k, 0) + c) % p
            if v:
                d[k] = v
            else:
                d.pop(k, None)
        return Poly(self, d)

    def monomial(self, exps, coeff=1) -> Poly:
        return self.from_terms({tuple(exps): coeff})

    def convert(self, f: Poly, index_map=None) -> Poly:
        """Move ``f`` into this ring; variable ``i`` of f becomes ``index_map[i]``."""
        src = f.ring
        if index_map is None:
            index_map = list(range(src.nvars))
        terms = {}
        for k, c in f.terms.items():
            a = [0] * self.nvars
            for i, v in enumerate(src.exps(k)):
                if v:
                    a[index_map[i]] += v
            terms[tuple(a)] = c
        return self.from_terms(terms)

    def with_weights(self, weights, names=None) -> PolyRing:
        return PolyRing(self.nvars, self.p, weights, names or self.names)

    def __eq__(self, other):
        return (isinstance(other, PolyRing) and self.nvars == other.nvars
                and self.p == other.p and self.weights == other.weights)

    def __hash__(self):
        return hash((self.nvars, self.p, self.weights))

    def __repr__(self):
        return "PolyRing(F_%d[%s])" % (self.p, ", ".join(self.names))


def grevlex_ring(nvars, p=DEFAULT_PRIME, names=None) -> PolyRing:
    return PolyRing(nvars, p, None, names)


def projective_ring(r, p=DEFAULT_PRIME) -> PolyRing:
    """Homogeneous coordinate ring of P^r."""
    return PolyRing(r + 1, p)


class Poly:
    """Polynomial with nonzero coefficients keyed by packed monomials.

    Treated as immutable once built.
    """

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms

    # -- inspection --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def lm(self) -> int:
        return max(self.terms)

    def lc(self) -> int:
        return self.terms[max(self.terms)]

    def degree(self):
        """Total degree; ``None`` for the zero polynomial."""
        if not self.terms:
            return None
        md = self.ring.mdeg
        return max(md(k) for k in self.terms)

    def is_homogeneous(self) -> bool:
        md = self.ring.mdeg
        return len({md(k) for k in self.terms}) <= 1

    def homogeneous_components(self) -> dict:
        md = self.ring.mdeg
        parts = {}
        for k, c in self.terms.items():
            parts.setdefault(md(k), {})[k] = c
        return {d: Poly(self.ring, t) for d, t in parts.items()}

    def exponent_dict(self) -> dict:
        ex = self.ring.exps
        return {ex(k): c for k, c in self.terms.items()}

    def variables(self) -> set:
        used = set()
        for k in self.terms:
            used.update(i for i, a in enumerate(self.ring.exps(k)) if a)
        return used

    def constant_value(self) -> int:
        return self.terms.get(0, 0)

    # -- arithmetic --------------------------------------------------------

    def _check(self, other):
        if isinstance(other, int):
            return self.ring.const(other)
        if not isinstance(other, Poly) or other.ring is not self.ring and other.ring != self.ring:
            raise TypeError("cannot combine polynomials from different rings")
        return other

    def __add__(self, other):
        other = self._check(other)
        p = self.ring.p
        d = dict(self.terms)
        for k, c in other.terms.items():
            v = (d.get(k, 0) + c) % p
            if v:
                d[k] = v
            else:
                d.pop(k, None)
        return Poly(self.ring, d)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.p
        return Poly(self.ring, {k: p - c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def scale(self, c: int) -> Poly:
        p = self.ring.p
        c %= p
        if not c:
            return Poly(self.ring, {})
        return Poly(self.ring, {k: v * c % p for k, v in self.terms.items()})

    def shift(self, m: int, c: int = 1) -> Poly:
        """Multiply by the term ``c * monomial(m)``."""
        p = self.ring.p
        c %= p
        if not c:
            return Poly(self.ring, {})
        return Poly(self.ring, {k + m: v * c % p for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        other = self._check(other)
        p = self.ring.p
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        d = {}
        get = d.get
        for kb, cb in b.items():
            for ka, ca in a.items():
                k = ka + kb
                d[k] = get(k, 0) + ca * cb
        return Poly(self.ring, {k: v % p for k, v in d.items() if v % p})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        out = self.ring.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def monic(self) -> Poly:
        if not self.terms:
            return self
        return self.scale(inverse(self.lc(), self.ring.p))

    def evaluate(self, point) -> int:
        """Value at a point of F_p^n."""
        p = self.ring.p
        total = 0
        for k, c in self.terms.items():
            v = c
            for x, a in zip(point, self.ring.exps(k)):
                if a:
                    v = v * pow(x, a, p) % p
            total += v
        return total % p

    # -- comparison / display ----------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "0"
        names = self.ring.names
        parts = []
        for k in sorted(self.terms, reverse=True):
            c = self.terms[k]
            mon = "*".join(n if a == 1 else "%s^%d" % (n, a)
                           for n, a in zip(names, self.ring.exps(k)) if a)
            if not mon:
                parts.append(str(c))
            elif c == 1:
                parts.append(mon)
            else:
                parts.append("%d*%s" % (c, mon))
        return " + ".join(parts)
