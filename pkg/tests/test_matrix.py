import itertools
import random

import pytest
import sympy
from hypothesis import given, strategies as st

from conftest import from_sympy_poly, to_sympy
from gnegard.matrix import (DegreeError, GradedMatrix, adjugate, determinant,
                            determinant_by_column, identity, minors, morphism_matrix, random_form)
from gnegard.poly import projective_ring

R = projective_ring(3)
X = sympy.symbols("x0:4")
seeds = st.integers(0, 10 ** 6)
twist_lists = st.lists(st.integers(-1, 1), min_size=2, max_size=4)


def test_degree_zero_form_is_nonzero_constant():
    for seed in range(20):
        f = random_form(R, 0, seed)
        assert f and f.degree() == 0


def test_linear_form_shape_and_determinism():
    ring = projective_ring(5)
    f = random_form(ring, 1, 1)
    assert f.is_homogeneous() and f.degree() == 1
    assert all(sum(a) == 1 for a in f.exponent_dict())
    assert f == random_form(ring, 1, 1)
    assert f.exponent_dict() == random_form(ring, 1, 1).exponent_dict()


@given(twist_lists, seeds)
def test_morphism_matrix_is_homogeneous(tw, seed):
    E, F = tw, [a + 1 for a in tw]
    M = morphism_matrix(R, E, F, seed)
    for i, j in itertools.product(range(len(F)), range(len(E))):
        d = F[i] - E[j]
        f = M[i, j]
        assert f.is_zero() or (d >= 0 and f.degree() == d)
    assert M == morphism_matrix(R, E, F, seed)


def test_inhomogeneous_entry_rejected():
    x = R.gens()
    with pytest.raises(DegreeError):
        GradedMatrix(R, [[x[0], x[0] ** 2]], [0], [-1, -1])


def _square(seed, n=3):
    return morphism_matrix(R, [0] * n, [1] * (n - 1) + [2], seed)


@given(seeds)
def test_determinant_against_sympy(seed):
    M = _square(seed)
    S = sympy.Matrix([[to_sympy(M[i, j], X) for j in range(3)] for i in range(3)])
    expected = from_sympy_poly(sympy.expand(S.det()), X, R.p)
    got = determinant(M).exponent_dict()
    assert {a: c % R.p for a, c in got.items()} == expected


@given(seeds, st.integers(0, 2))
def test_cofactor_expansion_along_any_column(seed, j):
    M = _square(seed)
    assert determinant(M) == determinant_by_column(M, j)


@given(seeds)
def test_determinant_alternates(seed):
    M = _square(seed)
    swapped = GradedMatrix(R, [M.entries[1], M.entries[0], M.entries[2]],
                           [M.row_degrees[1], M.row_degrees[0], M.row_degrees[2]], M.col_degrees)
    assert determinant(swapped) == -determinant(M)
    repeated = GradedMatrix(R, [M.entries[0], M.entries[0], M.entries[2]],
                            [M.row_degrees[0]] * 2 + [M.row_degrees[2]], M.col_degrees)
    assert determinant(repeated).is_zero()


@given(seeds, st.integers(3, 4))
def test_adjugate_identity(seed, n):
    M = morphism_matrix(R, [0] * n, [1] * n, seed)
    A = adjugate(M)
    D = determinant(M)
    for P in (A * M, M * A):
        for i, j in itertools.product(range(n), repeat=2):
            assert P[i, j] == (D if i == j else R.zero())


def test_minor_count_and_order():
    M = morphism_matrix(R, [0] * 4, [1] * 4, 5)
    ms = minors(M, 3)
    assert len(ms) == 16
    sub = GradedMatrix(R, [row[:3] for row in M.entries[:3]], M.row_degrees[:3], M.col_degrees[:3])
    assert ms[0] == determinant(sub)
    assert all(m.is_zero() or m.degree() == 3 for m in ms)


def test_identity_product():
    M = morphism_matrix(R, [0, 0], [1, 2], 3)
    assert identity(R, 2, M.row_degrees) * M == M


def test_random_form_seed_stream():
    rng = random.Random(4)
    a = random_form(R, 2, rng)
    b = random_form(R, 2, rng)
    assert a != b
