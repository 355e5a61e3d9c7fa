import pytest

from gnegard.complex import gn_shape
from gnegard.bundles import SplitBundle as O
from gnegard.invariants import report_to_json
from gnegard.presets import PRESETS, PresetSpec, run_preset


@pytest.mark.slow
@pytest.mark.parametrize("r", [5, 6, 7, 8])
@pytest.mark.parametrize("name", PRESETS)
def test_every_preset_passes_its_checks(name, r):
    rep = run_preset(PresetSpec(name, r)).report
    assert rep.passed, [c for c in rep.checks if not c["pass"]]
    assert rep.dimension == r - 4
    report_to_json(rep)


def test_degree17_betti_table_matches_its_shape():
    res = run_preset(PresetSpec("deg17", 6, mode="full"))
    assert res.report.betti.twists() == [list(t) for t in gn_shape(O([0] * 3), O([1, 1, 2])).terms]
    assert res.resolution.check_complex()


def test_complete_intersection_surface_invariants():
    rep = run_preset(PresetSpec("ci-cubics", 6, mode="full")).report
    assert rep.h_zero == [1, 0, 5]
    assert rep.diamond["h11"]["value"] == 51
