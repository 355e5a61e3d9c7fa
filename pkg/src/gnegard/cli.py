"""Command-line entry point ``gn``."""

from __future__ import annotations

import argparse
import json
import sys

from gnegard.bundles import SplitBundle, TangentBundle
from gnegard.chern import canonical_twist, degeneracy_degree
from gnegard.complex import euler_construction, gn_ideal, gn_shape
from gnegard.field import DEFAULT_PRIME
from gnegard.hilbert import codimension, hilbert_polynomial
from gnegard.invariants import (CohomologyHypothesisError, CrossCheckError, diamond_text,
                                report_to_json, structure_sheaf_cohomology)
from gnegard.matrix import morphism_matrix
from gnegard.poly import projective_ring
from gnegard.presets import PRESETS, DegenerateSampleError, PresetSpec, run_preset
from gnegard.resolution import minimal_free_resolution


def _bundle(text: str, r: int):
    if text.strip().upper() == "T":
        return TangentBundle(r)
    try:
        return SplitBundle.parse(text)
    except ValueError:
        raise argparse.ArgumentTypeError("bad twist list %r" % text)


def dumps_report(rep) -> str:
    return json.dumps(report_to_json(rep), indent=2, sort_keys=True) + "\n"


def format_report(rep) -> str:
    lines = ["preset %s  r=%d  p=%d  seed=%d  mode=%s" % (rep.preset, rep.r, rep.prime, rep.seed, rep.mode)]
    if rep.shape is not None:
        lines.append("resolution  " + str(rep.shape))
    rows = [("dimension", rep.dimension), ("degree", rep.degree),
            ("Hilbert polynomial", rep.hilbert_polynomial),
            ("sectional genus", rep.sectional_genus), ("chi(O)", rep.chi),
            ("h^i(O)", rep.h_zero), ("p_g", rep.pg), ("q", rep.q), ("K^2", rep.K2),
            ("canonical twist", rep.canonical_twist)]
    if rep.generator_degrees is not None:
        rows.insert(3, ("generator degrees", rep.generator_degrees))
    for name, v in rows:
        lines.append("  %-20s %s" % (name, "unknown" if v is None else v))
    if rep.betti is not None:
        lines.append("Betti table")
        lines.append(str(rep.betti))
    if rep.diamond is not None:
        lines.append("Hodge diamond")
        lines.append(diamond_text(rep.diamond["rows"]))
    lines.append("checks")
    for c in rep.checks:
        lines.append("  [%s] %s" % ("pass" if c["pass"] else "FAIL", c["name"]))
    for f in rep.flags:
        lines.append("  note: " + f)
    return "\n".join(lines) + "\n"


def cmd_run(args) -> int:
    spec = PresetSpec(args.preset, args.r, args.prime, args.seed, args.mode)
    try:
        result = run_preset(spec)
    except DegenerateSampleError as exc:
        print("degenerate sample: %s" % exc, file=sys.stderr)
        print("suggestion: gn run %s --r %d --seed %d" % (spec.name, spec.r, spec.seed + 1),
              file=sys.stderr)
        return 2
    except CrossCheckError as exc:
        print("cross-check failed: %s" % exc, file=sys.stderr)
        return 3
    rep = result.report
    if args.json:
        sys.stdout.write(dumps_report(rep))
    else:
        sys.stdout.write(format_report(rep))
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(dumps_report(rep))
    return 0 if rep.passed else 1


def cmd_porteous(args) -> int:
    print(degeneracy_degree(_bundle(args.E, args.r), _bundle(args.F, args.r), args.r))
    return 0


def _split_pair(args):
    E, F = SplitBundle.parse(args.E), SplitBundle.parse(args.F)
    if E.rank != F.rank:
        raise SystemExit("error: E and F must have equal rank")
    return E, F


def cmd_shape(args) -> int:
    E, F = _split_pair(args)
    print(gn_shape(E, F))
    return 0


def _ideal(args):
    E, F = _split_pair(args)
    ring = projective_ring(args.r, args.prime)
    return gn_ideal(morphism_matrix(ring, E.twists, F.twists, args.seed))


def cmd_ideal(args) -> int:
    I = _ideal(args)
    gens = I.minimal_generators()
    print("generators  %d of degrees %s" % (len(gens), sorted(g.degree() for g in gens)))
    print("codimension %d" % codimension(I))
    hp = hilbert_polynomial(I)
    print("degree      %d" % hp.scheme_degree())
    print("Hilbert polynomial %s" % hp)
    return 0


def cmd_betti(args) -> int:
    print(minimal_free_resolution(_ideal(args)).betti())
    return 0


def cmd_saturate(args) -> int:
    E = SplitBundle.parse(args.E)
    ec = euler_construction(E, args.r, args.seed, args.prime)
    before = sorted(g.degree() for g in ec.ideal.minimal_generators())
    gens = sorted(g.degree() for g in ec.saturated.minimal_generators())
    hp = hilbert_polynomial(ec.saturated)
    print("minors      degrees %s" % before)
    print("saturated   %d generators of degrees %s" % (len(gens), gens))
    print("degree      %d" % hp.scheme_degree())
    print("Hilbert polynomial %s" % hp)
    return 0


def cmd_cohomology(args) -> int:
    E, F = _split_pair(args)
    try:
        h = structure_sheaf_cohomology(gn_shape(E, F), args.r)
    except CohomologyHypothesisError as exc:
        print("undetermined: %s" % exc, file=sys.stderr)
        return 1
    print(" ".join("h^%d=%d" % (i, v) for i, v in enumerate(h)))
    print("canonical twist %d" % canonical_twist(E, F, args.r))
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="gn", description="Degeneracy loci of maps of bundles on P^r.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("run", help="run a named example end to end")
    p.add_argument("preset", choices=PRESETS)
    p.add_argument("--r", type=int, default=6)
    p.add_argument("--prime", type=int, default=DEFAULT_PRIME)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--mode", choices=("fast", "full"), default=None)
    p.add_argument("--out", help="write the JSON report here")
    p.add_argument("--json", action="store_true", help="print JSON instead of text")
    p.set_defaults(func=cmd_run)

    def pair(name, help_, func, needs_F=True, random=False):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--E", required=True, help="comma-separated twists, e.g. 0,0,0")
        if needs_F:
            p.add_argument("--F", required=True, help="comma-separated twists, or T for the tangent bundle")
        p.add_argument("--r", type=int, default=6)
        if random:
            p.add_argument("--prime", type=int, default=DEFAULT_PRIME)
            p.add_argument("--seed", type=int, default=7)
        p.set_defaults(func=func)

    pair("porteous", "degree of the rank-(e-2) locus", cmd_porteous)
    pair("shape", "terms of the resolution", cmd_shape)
    pair("ideal", "submaximal minors of a random map", cmd_ideal, random=True)
    pair("betti", "Betti table of the minors ideal", cmd_betti, random=True)
    pair("saturate", "saturated locus of a random map E -> T_P^r", cmd_saturate,
         needs_F=False, random=True)
    pair("cohomology", "h^i(O_X) from the resolution shape", cmd_cohomology)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
