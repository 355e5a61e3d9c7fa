"""Named end-to-end runs: build the map, the ideal and the report."""

from __future__ import annotations

from dataclasses import dataclass, field

from gnegard.bundles import SplitBundle, TangentBundle
from gnegard.chern import canonical_twist, degeneracy_degree
from gnegard.complex import ComplexShape, euler_matrix, gn_differentials, gn_ideal, gn_shape
from gnegard.field import DEFAULT_PRIME
from gnegard.groebner import Ideal
from gnegard.hilbert import codimension, hilbert_polynomial
from gnegard.invariants import InvariantReport, assemble_report, hp_from_shape
from gnegard.matrix import minors, morphism_matrix
from gnegard.poly import projective_ring
from gnegard.resolution import minimal_free_resolution
from gnegard.saturation import cut_linear_span, saturate

SPLIT = {
    "delpezzo": ((0, 0, 0), (1, 1, 1)),
    "deg20": ((0, 0, 0, 0), (1, 1, 1, 1)),
    "deg17": ((0, 0, 0), (1, 1, 2)),
}
# E for a map E -> T_P^r of rank r; n = r - 4 is the dimension of the locus
TANGENT = {
    "deg20-tangent": lambda n: [1] * (n + 1) + [0, 0, 0],
    "deg17-tangent": lambda n: [1] * (n + 2) + [0, -1],
    "ci-cubics": lambda n: [1] * (n + 3) + [-2],
}
SPLIT_COUNTERPART = {"deg20-tangent": "deg20", "deg17-tangent": "deg17"}
H21_ANNOTATION = {"deg20": 34, "deg17": 58}
PRESETS = tuple(SPLIT) + tuple(TANGENT)
DEFAULT_SEEDS = {"delpezzo": 7, "deg20": 7, "deg17": 7, "ci-cubics": 3,
                 "deg20-tangent": 3, "deg17-tangent": 3}
R_RANGE = range(5, 9)


class DegenerateSampleError(RuntimeError):
    """The random map is not generic enough: the locus has the wrong codimension."""


@dataclass(frozen=True)
class PresetSpec:
    name: str
    r: int
    prime: int = DEFAULT_PRIME
    seed: int | None = None
    mode: str | None = None

    def __post_init__(self):
        if self.name not in PRESETS:
            raise ValueError("unknown preset %r (choose from %s)" % (self.name, ", ".join(PRESETS)))
        if self.r not in R_RANGE:
            raise ValueError("r must lie in 5..8, got %d" % self.r)
        if self.mode not in (None, "fast", "full"):
            raise ValueError("mode must be fast or full")
        if self.seed is None:
            object.__setattr__(self, "seed", DEFAULT_SEEDS[self.name])
        if self.mode is None:
            object.__setattr__(self, "mode", "full" if self.r <= 6 else "fast")

    @property
    def is_tangent(self) -> bool:
        return self.name in TANGENT

    def bundles(self):
        if self.is_tangent:
            return SplitBundle(TANGENT[self.name](self.r - 4)), TangentBundle(self.r)
        E, F = SPLIT[self.name]
        return SplitBundle(E), SplitBundle(F)


@dataclass
class RunResult:
    spec: PresetSpec
    report: InvariantReport
    matrix: object = None
    ideal: Ideal | None = None
    resolution: object = None
    extra: dict = field(default_factory=dict)


def _split_run(spec, ring, E, F, degree, k):
    M = morphism_matrix(ring, E.twists, F.twists, spec.seed)
    shape = gn_shape(E, F)
    I = gn_ideal(M)
    codim = codimension(I)
    if codim != 4:
        raise DegenerateSampleError("codimension %d instead of 4 for seed %d; re-run with "
                                    "another --seed" % (codim, spec.seed))
    flags = []
    d = gn_differentials(M)
    res = None
    betti = None
    if spec.mode == "full":
        res = minimal_free_resolution(I)
        betti = res.betti()
    else:
        flags.append("fast mode: Betti table skipped, shape-derived invariants")
    gens = sorted(g.degree() for g in I.minimal_generators())
    rep = assemble_report(preset=spec.name, r=spec.r, prime=spec.prime, seed=spec.seed,
                          mode=spec.mode, degree=degree, canonical_twist=k,
                          hp_ideal=hilbert_polynomial(I), shape=shape, codim=codim,
                          betti=betti, generator_degrees=gens,
                          h21_annotation=H21_ANNOTATION.get(spec.name), flags=flags)
    rep.check("differentials compose to zero", d.compositions_vanish())
    rep.check("differentials have the predicted shape", d.shape() == shape)
    rep.check("generator degrees = first term of shape",
              gens == sorted(-a for a in shape.terms[1]))
    if res is not None:
        rep.check("resolution is a complex", res.check_complex())
    return RunResult(spec, rep, M, I, res)


def _tangent_run(spec, ring, E, T, degree, k):
    M = euler_matrix(ring, E, spec.seed)
    raw = Ideal(ring, minors(M, spec.r))
    I = saturate(raw)
    codim = codimension(I)
    if codim != 4:
        raise DegenerateSampleError("codimension %d instead of 4 for seed %d; re-run with "
                                    "another --seed" % (codim, spec.seed))
    flags = []
    res = betti = shape = None
    gens = sorted(g.degree() for g in I.minimal_generators())
    shape_r = spec.r
    if spec.mode == "full":
        res = minimal_free_resolution(I)
        betti = res.betti()
        shape = ComplexShape(betti.twists())
        if 1 in gens:
            J, kept = cut_linear_span(I)
            shape_r = len(kept) - 1
            shape = ComplexShape(minimal_free_resolution(J).betti().twists())
            flags.append("cohomology read off the resolution inside the linear span P^%d" % shape_r)
    else:
        flags.append("fast mode: Betti table skipped")
    hp = hilbert_polynomial(I)
    rep = assemble_report(preset=spec.name, r=spec.r, prime=spec.prime, seed=spec.seed,
                          mode=spec.mode, degree=degree, canonical_twist=k,
                          hp_ideal=hp, shape=shape, codim=codim, betti=betti,
                          generator_degrees=gens,
                          h21_annotation=H21_ANNOTATION.get(SPLIT_COUNTERPART.get(spec.name)),
                          flags=flags, shape_r=shape_r)
    twin = SPLIT_COUNTERPART.get(spec.name)
    if twin is not None:
        E2, F2 = (SplitBundle(t) for t in SPLIT[twin])
        twin_shape = gn_shape(E2, F2)
        rep.check("generator degrees = split counterpart",
                  gens == sorted(-a for a in twin_shape.terms[1]))
        rep.check("Hilbert polynomial = split counterpart", hp == hp_from_shape(twin_shape, spec.r))
        if shape is not None:
            rep.check("Betti table = split counterpart", shape == twin_shape)
    if res is not None:
        rep.check("resolution is a complex", res.check_complex())
    return RunResult(spec, rep, M, I, res, {"unsaturated": raw})


def run_preset(spec: PresetSpec) -> RunResult:
    """Build the preset's map and ideal, resolve it if asked, and cross-check."""
    ring = projective_ring(spec.r, spec.prime)
    E, F = spec.bundles()
    degree = degeneracy_degree(E, F, spec.r)
    k = canonical_twist(E, F, spec.r)
    if spec.is_tangent:
        return _tangent_run(spec, ring, E, F, degree, k)
    return _split_run(spec, ring, E, F, degree, k)
