"""One test per acceptance criterion; each records a pass/fail line."""

import functools
import json
import os
import random
import subprocess
import sys
import time
from fractions import Fraction as Fr

from conftest import ACCEPTANCE
from gnegard.bundles import SplitBundle as O, TangentBundle
from gnegard.chern import degeneracy_degree
from gnegard.complex import (ComplexShape, check_self_duality, gn_differentials, gn_ideal,
                             gn_shape, line_bundle_L)
from gnegard.groebner import Ideal
from gnegard.hilbert import (HilbertPolynomial, codimension, hilbert_function,
                             hilbert_function_bruteforce, hilbert_polynomial)
from gnegard.invariants import (hp_from_shape, sectional_genus, structure_sheaf_cohomology,
                                surface_diamond)
from gnegard.matrix import minors, morphism_matrix
from gnegard.poly import projective_ring
from gnegard.presets import PRESETS, SPLIT, DegenerateSampleError, PresetSpec, run_preset
from gnegard.resolution import BettiTable, minimal_free_resolution
from gnegard.saturation import saturate

DELPEZZO_SHAPE = ComplexShape([[0], [-2] * 9, [-3] * 16, [-4] * 9, [-6]])
SHAPE_1 = ComplexShape([[0], [-3] * 16, [-4] * 30, [-5] * 16, [-8]])
SHAPE_2 = ComplexShape([[0], [-2] * 3 + [-3] * 6, [-3] * 2 + [-4] * 12 + [-5] * 2,
                        [-5] * 6 + [-6] * 3, [-8]])
HP_SURF_20 = HilbertPolynomial([8, -10, 10])
HP_CY_20 = HilbertPolynomial([0, Fr(14, 3), 0, Fr(10, 3)])
HP_SURF_17 = HilbertPolynomial([8, Fr(-17, 2), Fr(17, 2)])
HP_CY_17 = HilbertPolynomial([0, Fr(31, 6), 0, Fr(17, 6)])
MAX_SEEDS = 5


def criterion(n, title):
    def wrap(fn):
        @functools.wraps(fn)
        def run(*args, **kwargs):
            try:
                fn(*args, **kwargs)
            except BaseException:
                ACCEPTANCE[n] = (False, title)
                print("criterion %d: FAIL  %s" % (n, title))
                raise
            ACCEPTANCE[n] = (True, title)
            print("criterion %d: PASS  %s" % (n, title))
        return run
    return wrap


def with_reseed(name, r, mode="full"):
    """Run a preset, moving to the next seed when the sample is degenerate."""
    seed = PresetSpec(name, r).seed
    for k in range(MAX_SEEDS):
        try:
            return run_preset(PresetSpec(name, r, seed=seed + k, mode=mode))
        except DegenerateSampleError:
            continue
    raise AssertionError("no generic sample among %d seeds" % MAX_SEEDS)


@criterion(1, "Porteous degrees 20, 17, 9, 6 in under 1 s")
def test_criterion_01_porteous():
    t = time.perf_counter()
    assert degeneracy_degree(O([0] * 4), O([1] * 4), 6) == 20
    assert degeneracy_degree(O([0] * 3), O([1, 1, 2]), 6) == 17
    assert degeneracy_degree(O([1] * 5 + [-2]), TangentBundle(6), 6) == 9
    assert degeneracy_degree(O([0] * 3), O([1] * 3), 5) == 6
    assert time.perf_counter() - t < 1.0


@criterion(2, "GN shapes equal the three displayed resolutions; self-dual for every preset; < 1 s")
def test_criterion_02_shapes():
    t = time.perf_counter()
    assert gn_shape(O([0] * 3), O([1] * 3)) == DELPEZZO_SHAPE
    assert gn_shape(O([0] * 4), O([1] * 4)) == SHAPE_1
    assert gn_shape(O([0] * 3), O([1, 1, 2])) == SHAPE_2
    for E, F in SPLIT.values():
        E, F = O(E), O(F)
        assert check_self_duality(gn_shape(E, F), line_bundle_L(E, F))
    assert time.perf_counter() - t < 1.0


@criterion(3, "Hilbert polynomials from shapes, exact rationals")
def test_criterion_03_hilbert_polynomials():
    assert hp_from_shape(SHAPE_1, 6) == HP_SURF_20
    assert hp_from_shape(SHAPE_1, 7) == HP_CY_20
    assert hp_from_shape(SHAPE_2, 6) == HP_SURF_17
    assert hp_from_shape(SHAPE_2, 7) == HP_CY_17
    assert str(HP_SURF_17) == "(17/2)x^2 - (17/2)x + 8"


@criterion(4, "sectional genera 21 and 18")
def test_criterion_04_sectional_genus():
    assert sectional_genus(hp_from_shape(SHAPE_1, 6)) == 21
    assert sectional_genus(hp_from_shape(SHAPE_2, 6)) == 18


@criterion(5, "p_g=7, q=0, K^2 in {20,17}, h11 60/63, CY3 row (1,0,0,1), CY3 h11/h21 not claimed")
def test_criterion_05_cohomology():
    for shape, d, h11 in ((SHAPE_1, 20, 60), (SHAPE_2, 17, 63)):
        h = structure_sheaf_cohomology(shape, 6)
        assert h == [1, 0, 7]
        chi = hp_from_shape(shape, 6)(0)
        assert surface_diamond(int(chi), d, h[2], h[1]).h11 == h11
        assert structure_sheaf_cohomology(shape, 7) == [1, 0, 0, 1]
    for name, d, h21 in (("deg20", 20, 34), ("deg17", 17, 58)):
        rep = run_preset(PresetSpec(name, 6, mode="fast")).report
        assert (rep.pg, rep.q, rep.K2) == (7, 0, d)
        cy = run_preset(PresetSpec(name, 7, mode="fast")).report
        assert cy.h_zero == [1, 0, 0, 1]
        assert cy.diamond["h11"]["value"] == "unknown"
        assert cy.diamond["h21"] == {"value": h21, "source": "paper-annotation"}


@criterion(6, "Groebner end to end over F_101: del Pezzo r=5 and degree-20 surface r=6")
def test_criterion_06_groebner_end_to_end():
    res = with_reseed("delpezzo", 5)
    rep = res.report
    assert codimension(res.ideal) == 4 and rep.degree == 6
    assert rep.betti == BettiTable.from_degrees([[-a for a in t] for t in DELPEZZO_SHAPE.terms])
    res = with_reseed("deg20", 6)
    assert codimension(res.ideal) == 4
    assert res.report.degree == 20
    assert hilbert_polynomial(res.ideal) == HP_SURF_20


@criterion(7, "differentials compose to zero for 3x3 and 4x4; d1 entries cut out the minors")
def test_criterion_07_differentials():
    ring = projective_ring(5)
    cases = [((0,) * 3, (1,) * 3), ((0,) * 3, (1, 1, 2)), ((0,) * 4, (1,) * 4),
             ((0,) * 3, (0, 0, 0)), ((0,) * 4, (0, 1, 1, 1))]
    for seed in range(4):
        for E, F in cases:
            M = morphism_matrix(ring, E, F, 100 + seed)
            d = gn_differentials(M)
            assert d.compositions_vanish()
            I = Ideal(ring, d.d1.entries[0])
            J = gn_ideal(M)
            assert I.contains_ideal(J) and J.contains_ideal(I)


@criterion(8, "tangent constructions: 2 linear + 2 cubics of degree 9; shapes (1)/(2) after saturation")
def test_criterion_08_euler_construction():
    rep = with_reseed("ci-cubics", 6, mode="fast").report
    assert rep.generator_degrees == [1, 1, 3, 3] and rep.degree == 9
    for name, shape, hp in (("deg20-tangent", SHAPE_1, HP_SURF_20), ("deg17-tangent", SHAPE_2, HP_SURF_17)):
        rep = with_reseed(name, 6, mode="full").report
        assert rep.generator_degrees == sorted(-a for a in shape.terms[1])
        assert rep.hilbert_polynomial == hp
        assert rep.shape == shape and rep.betti.twists() == [list(t) for t in shape.terms]
        assert rep.passed


@criterion(9, "oracles: brute-force Hilbert function through degree 6 on r=5 presets, "
              "saturation idempotence, basis uniqueness under permutation")
def test_criterion_09_oracles():
    for name in PRESETS:
        res = with_reseed(name, 5, mode="fast")
        I = res.ideal
        for d in range(7):
            assert hilbert_function_bruteforce(I.ring, I.generators, d) == hilbert_function(I, d)
        S = saturate(I)
        assert saturate(S) == S
        gens = list(I.generators)
        for k in range(3):
            random.Random(k).shuffle(gens)
            assert Ideal(I.ring, gens).groebner_basis() == I.groebner_basis()


@criterion(10, "identical runs give byte-identical JSON reports")
def test_criterion_10_determinism(tmp_path):
    outs = []
    for hashseed in ("1", "2"):
        path = tmp_path / ("run%s.json" % hashseed)
        env = dict(os.environ, PYTHONHASHSEED=hashseed)
        subprocess.run([sys.executable, "-m", "gnegard.cli", "run", "deg17", "--r", "6",
                        "--seed", "7", "--out", str(path)], check=True, env=env,
                       stdout=subprocess.DEVNULL)
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]
    assert json.loads(outs[0])["degree"]["value"] == 17
