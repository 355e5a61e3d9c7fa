import random
from math import comb

from hypothesis import given, settings, strategies as st

from gnegard.groebner import Ideal
from gnegard.hilbert import hilbert_series
from gnegard.matrix import minors, morphism_matrix, random_form
from gnegard.poly import projective_ring
from gnegard.resolution import (BettiTable, minimal_free_resolution, minimalize,
                                schreyer_resolution, syzygies)

R = projective_ring(3)


def k_polynomial(betti):
    """sum (-1)^i beta_ij t^j as a coefficient list."""
    top = max(j for _, j in betti.entries)
    out = [0] * (top + 1)
    for (i, j), v in betti.entries.items():
        out[j] += (-1) ** i * v
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def is_minimal(res):
    return all(not (f and f.degree() == 0) for d in res.differentials for row in d.entries for f in row)


def _check(I):
    res = minimal_free_resolution(I)
    assert res.complete and res.check_complex() and is_minimal(res)
    # exactness through the Hilbert series of R/I
    assert k_polynomial(res.betti()) == hilbert_series(I)
    return res


def test_koszul_syzygy_of_two_variables():
    x = R.gens()
    K = syzygies([x[0], x[1]])
    assert K.shape == (2, 1)
    col = K.column(0)
    c = col[1].lc()
    assert col[1] == x[0].scale(c) and col[0] == -x[1].scale(c)


@given(st.integers(0, 10 ** 6), st.lists(st.integers(1, 3), min_size=1, max_size=4))
@settings(max_examples=15)
def test_complete_intersection_is_koszul(seed, degs):
    rng = random.Random(seed)
    I = Ideal(R, [random_form(R, d, rng) for d in degs])
    res = _check(I)
    c = len(degs)
    assert res.betti().ranks() == [comb(c, i) for i in range(c + 1)]
    assert res.betti()[c, sum(degs)] == 1


def test_eagon_northcott_for_maximal_minors():
    M = morphism_matrix(R, [0, 0, 0], [1, 1], 3)
    res = _check(Ideal(R, minors(M, 2)))
    assert res.betti() == BettiTable({(0, 0): 1, (1, 2): 3, (2, 3): 2})


def test_non_minimal_resolution_minimalizes_to_the_same_table():
    ring = projective_ring(5)
    I = Ideal(ring, minors(morphism_matrix(ring, [0] * 3, [1] * 3, 7), 2))
    direct = minimal_free_resolution(I).betti()
    via = minimalize(schreyer_resolution(I))
    assert via.check_complex() and is_minimal(via)
    assert via.betti() == direct


@given(st.integers(0, 10 ** 6))
@settings(max_examples=10)
def test_random_sparse_ideals(seed):
    rng = random.Random(seed)
    gens = []
    for d in (2, 2, 3):
        f = random_form(R, d, rng)
        gens.append(R.from_terms({a: c for a, c in f.exponent_dict().items() if rng.random() < 0.3}))
    gens = [g for g in gens if g]
    if gens:
        _check(Ideal(R, gens))


def test_betti_grid_layout():
    b = BettiTable({(0, 0): 1, (1, 2): 9, (2, 3): 16, (3, 4): 9, (4, 6): 1})
    assert str(b).splitlines() == [
        "     0  1  2  3  4",
        "   ---------------",
        " 0:  1  .  .  .  .",
        " 1:  .  9 16  9  .",
        " 2:  .  .  .  .  1",
    ]
    assert b.twists() == [[0], [-2] * 9, [-3] * 16, [-4] * 9, [-6]]
    assert b.to_json()[0] == [0, 0, 1]


def test_length_bound_flags_partial_result():
    ring = projective_ring(5)
    I = Ideal(ring, minors(morphism_matrix(ring, [0] * 3, [1] * 3, 7), 2))
    res = minimal_free_resolution(I, length_bound=2)
    assert not res.complete and len(res.differentials) == 2
