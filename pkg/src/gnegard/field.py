"""Prime field arithmetic.

Polynomials store coefficients as plain ints in ``[0, p)``; :class:`GF` is the
user-facing element type used where an object is more convenient.
"""

from __future__ import annotations

DEFAULT_PRIME = 101


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    k = 3
    while k * k <= n:
        if n % k == 0:
            return False
        k += 2
    return True


def inverse(a: int, p: int) -> int:
    """Multiplicative inverse of ``a`` modulo the prime ``p``."""
    a %= p
    if a == 0:
        raise ZeroDivisionError("0 has no inverse in F_%d" % p)
    return pow(a, -1, p)


class GF:
    """An element of the prime field F_p."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int = DEFAULT_PRIME):
        self.p = p
        self.value = value % p

    def _coerce(self, other):
        if isinstance(other, GF):
            if other.p != self.p:
                raise ValueError("elements of different fields")
            return other.value
        if isinstance(other, int):
            return other % self.p
        return NotImplemented

    def __add__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return GF(self.value + b, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return GF(self.value - b, self.p)

    def __rsub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return GF(b - self.value, self.p)

    def __mul__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return GF(self.value * b, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return GF(-self.value, self.p)

    def inverse(self) -> GF:
        return GF(inverse(self.value, self.p), self.p)

    def __truediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return GF(self.value * inverse(b, self.p), self.p)

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return GF(pow(self.value, k, self.p), self.p)

    def __eq__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return False
        return self.value == b

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return "GF(%d, %d)" % (self.value, self.p)
