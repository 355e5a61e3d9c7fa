from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from gnegard.bundles import SplitBundle, TangentBundle
from gnegard.chern import (ChernSeries, canonical_twist, chern_of, chern_of_split,
                           degeneracy_degree, porteous_degree, quotient_series)

h = sympy.symbols("h")
twists = st.lists(st.integers(-3, 3), min_size=1, max_size=5)


def sympy_quotient(E, F, r):
    num = sympy.prod([1 + a * h for a in F])
    den = sympy.prod([1 + a * h for a in E])
    s = sympy.series(num / den, h, 0, r + 1).removeO()
    return [Fraction(int(sympy.Poly(s, h).coeff_monomial(h ** k))) for k in range(r + 1)]


@given(twists, twists, st.integers(3, 8))
def test_quotient_matches_sympy_series(E, F, r):
    q = quotient_series(chern_of_split(F, r), chern_of_split(E, r))
    assert list(q.coefficients) == sympy_quotient(E, F, r)


@given(twists, twists, st.integers(1, 6))
def test_quotient_times_denominator(E, F, r):
    num, den = chern_of_split(F, r), chern_of_split(E, r)
    assert (num / den) * den == num


def test_porteous_examples():
    assert porteous_degree(ChernSeries([1, 4, 9, 18], 3)) == 9
    O = SplitBundle
    assert degeneracy_degree(O([0] * 3), O([1, 1, 1]), 5) == 6
    assert degeneracy_degree(O([0] * 4), O([1] * 4), 6) == 20
    assert degeneracy_degree(O([0] * 3), O([1, 1, 2]), 6) == 17
    assert degeneracy_degree(O([1] * 5 + [-2]), TangentBundle(6), 6) == 9


@pytest.mark.parametrize("r", [5, 6, 7, 8])
def test_porteous_degree_does_not_depend_on_r(r):
    E, F = SplitBundle([0] * 3), SplitBundle([1, 1, 2])
    assert degeneracy_degree(E, F, r) == 17


def test_tangent_chern_class():
    c = chern_of(TangentBundle(4), 4)
    assert c.coefficients == (1, 5, 10, 10, 5)
    with pytest.raises(ValueError):
        chern_of(TangentBundle(4), 5)


def test_non_integral_degree_rejected():
    with pytest.raises(ValueError):
        porteous_degree(ChernSeries([1, 0, Fraction(1, 2), 0], 3))


def test_canonical_twist():
    O = SplitBundle
    assert canonical_twist(O([0] * 4), O([1] * 4), 6) == 1
    assert canonical_twist(O([0] * 4), O([1] * 4), 7) == 0
    assert canonical_twist(O([0] * 3), O([1, 1, 2]), 6) == 1
    assert canonical_twist(O([0] * 3), O([1] * 3), 5) == 0
    assert canonical_twist(O([1] * 3 + [0] * 3), TangentBundle(6), 6) == 1


def test_tangent_quotient_for_complete_intersection():
    for r in (5, 6, 7, 8):
        E = SplitBundle([1] * (r - 1) + [-2])
        q = quotient_series(chern_of(TangentBundle(r), r), chern_of(E, r))
        assert q.coefficients[:4] == (1, 4, 9, 18)


def test_del_pezzo_twist_is_anticanonical_for_surfaces():
    O = SplitBundle
    assert canonical_twist(O([0] * 3), O([1] * 3), 6) == -1
    # swapping E and F flips the sign of the c_1 term
    assert canonical_twist(O([1] * 3), O([0] * 3), 6) + canonical_twist(O([0] * 3), O([1] * 3), 6) == -14
