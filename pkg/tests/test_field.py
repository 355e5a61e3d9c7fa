import pytest
from hypothesis import given, strategies as st

from gnegard.field import DEFAULT_PRIME, GF, inverse, is_prime

P = DEFAULT_PRIME
elems = st.integers(0, P - 1).map(lambda v: GF(v, P))


def test_default_prime():
    assert P == 101 and is_prime(P)


def test_is_prime_small():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


@given(st.integers(1, P - 1))
def test_inverse(a):
    assert a * inverse(a, P) % P == 1


def test_inverse_of_zero_fails():
    with pytest.raises(ZeroDivisionError):
        inverse(0, P)


@given(elems, elems, elems)
def test_field_axioms(a, b, c):
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == GF(0, P)
    if a:
        assert a * a.inverse() == GF(1, P)
        assert b / a * a == b


@given(elems)
def test_fermat(a):
    assert a ** P == a
