from __future__ import annotations

import json
from pathlib import Path

import pytest

from framerisk import (
    FrameGeometry,
    Scenario,
    StudyDefinition,
    ValidationError,
    parse_scenario,
    reliability_grid,
    run_study,
    scenario_from_dict,
    set_scenario_field,
    strengthening_table,
    trace_table,
    validate,
)

GOLDEN_DIR = Path(__file__).parent / "golden"


def write_scenario(tmp_path, data) -> Path:
    path = tmp_path / "scenario.json"
    path.write_text(json.dumps(data))
    return path


class TestParseScenario:
    def test_empty_object_gives_reference_case(self, tmp_path):
        scn = parse_scenario(write_scenario(tmp_path, {}))
        assert scn == validate(Scenario())

    def test_partial_geometry_override(self, tmp_path):
        scn = parse_scenario(write_scenario(tmp_path, {"geometry": {"n_s": 16, "n_c": 5}}))
        assert scn.geometry.n_s == 16
        assert scn.geometry.n_c == 5
        assert scn.geometry.L == 6.0  # untouched default
        assert scn.p_ld == 0.1

    def test_invariant_violation_rejected(self, tmp_path):
        with pytest.raises(ValidationError, match="psi"):
            parse_scenario(write_scenario(tmp_path, {"psi": 9}))

    def test_unknown_top_level_key_rejected(self, tmp_path):
        with pytest.raises(ValueError, match="p_threat"):
            parse_scenario(write_scenario(tmp_path, {"p_threat": 0.1}))

    def test_unknown_nested_key_rejected(self, tmp_path):
        with pytest.raises(ValueError, match="stories"):
            parse_scenario(write_scenario(tmp_path, {"geometry": {"stories": 8}}))

    def test_stats_override(self, tmp_path):
        data = {"loads": {"l_n": 2.0, "beam_resistance": {"mean": 1.1, "std": 0.3, "dist": "lognormal"}}}
        scn = parse_scenario(write_scenario(tmp_path, data))
        assert scn.loads.beam_resistance.mean == 1.1
        assert scn.loads.beam_resistance.dist == "lognormal"
        assert scn.loads.live_50.mean == 2.0  # derived from the nominal override

    def test_incomplete_stats_rejected(self):
        with pytest.raises(ValueError, match="mean"):
            scenario_from_dict({"loads": {"dead": {"std": 0.1}}})

    def test_non_object_document_rejected(self):
        with pytest.raises(ValueError, match="object"):
            scenario_from_dict([1, 2, 3])


class TestSetScenarioField:
    def test_top_level(self, ref_scenario):
        assert set_scenario_field(ref_scenario, "p_ld", 0.5).p_ld == 0.5

    def test_nested(self, ref_scenario):
        scn = set_scenario_field(ref_scenario, "geometry.n_s", 16)
        assert scn.geometry.n_s == 16

    def test_nominal_load_rederives_statistics(self, ref_scenario):
        scn = set_scenario_field(ref_scenario, "loads.l_n", 2.0)
        assert scn.loads.live_apt.mean == pytest.approx(0.5)
        assert scn.loads.live_50.std == pytest.approx(0.5)

    def test_unknown_field_rejected(self, ref_scenario):
        with pytest.raises(ValueError):
            set_scenario_field(ref_scenario, "geometry.stories", 3)
        with pytest.raises(ValueError):
            set_scenario_field(ref_scenario, "nonsense", 3)


class TestStudyDefinition:
    def test_empty_axis_rejected(self, ref_scenario, tmp_path):
        with pytest.raises(ValueError, match="empty"):
            StudyDefinition(base=ref_scenario, axes=(("p_ld", ()),), outdir=tmp_path)

    def test_bad_axis_name_rejected(self, ref_scenario, tmp_path):
        with pytest.raises(ValueError):
            StudyDefinition(base=ref_scenario, axes=(("bogus", (1,)),), outdir=tmp_path)

    def test_no_axes_rejected(self, ref_scenario, tmp_path):
        with pytest.raises(ValueError):
            StudyDefinition(base=ref_scenario, axes=(), outdir=tmp_path)


class TestRunStudy:
    def test_single_axis_sweep(self, ref_scenario, tmp_path):
        study = StudyDefinition(
            base=ref_scenario,
            axes=(("p_ld", (0.05, 0.1)),),
            outdir=tmp_path,
            write_svg=True,
        )
        header, rows = run_study(study)
        assert header[0] == "p_ld"
        assert [r[0] for r in rows] == [0.05, 0.1]
        assert (tmp_path / "sweep.csv").exists()
        assert (tmp_path / "sweep.svg").exists()
        # lambda_c* should not be hugely sensitive here, lambda_b* grows with p
        assert rows[1][1] >= rows[0][1]

    def test_parallel_matches_serial(self, ref_scenario, tmp_path):
        axes = (("p_ld", (0.05, 0.2)), ("costs.k_ductile", (20.0, 40.0)))
        serial = run_study(
            StudyDefinition(base=ref_scenario, axes=axes, outdir=tmp_path / "s", jobs=1)
        )
        parallel = run_study(
            StudyDefinition(base=ref_scenario, axes=axes, outdir=tmp_path / "p", jobs=2)
        )
        assert serial == parallel
        assert (tmp_path / "s" / "sweep.csv").read_bytes() == (tmp_path / "p" / "sweep.csv").read_bytes()

    def test_sweep_with_threshold(self, tmp_path):
        base = validate(Scenario(geometry=FrameGeometry(16, 5)))
        study = StudyDefinition(
            base=base,
            axes=(("p_ld", (0.1,)),),
            outdir=tmp_path,
            with_threshold=True,
        )
        header, rows = run_study(study)
        assert header[-2:] == ["threshold_status", "p_ld_th"]
        assert rows[0][-2] == "bracketed"
        assert 3e-4 <= rows[0][-1] <= 3e-3

    def test_cartesian_order(self, ref_scenario, tmp_path):
        study = StudyDefinition(
            base=ref_scenario,
            axes=(("p_ld", (0.05, 0.1)), ("costs.k_brittle", (40.0, 80.0))),
            outdir=tmp_path,
        )
        _, rows = run_study(study)
        assert [(r[0], r[1]) for r in rows] == [(0.05, 40.0), (0.05, 80.0), (0.1, 40.0), (0.1, 80.0)]


def test_reliability_grid_layout(ref_scenario):
    header, rows = reliability_grid(ref_scenario, optimized=None)
    assert header == ["live_load", "mode", "nlc", "strengthened", "damaged", "optimized"]
    assert len(rows) == 8  # 4 modes x 2 horizons
    by_key = {(r[0], r[1]): r for r in rows}
    assert by_key[("apt", "local_pancake")][2] == ""  # undefined for the intact frame
    assert by_key[("apt", "bending")][4] == pytest.approx(2.03, abs=0.02)


def test_strengthening_table_covers_catalog():
    header, rows = strengthening_table()
    assert header == ["frame", "damage", "b_sf", "r_sf"]
    assert len(rows) == 7 * 4
    by_key = {(r[0], r[1]): r for r in rows}
    assert by_key[("8x8", "1x1")][3] == pytest.approx(1.15, abs=0.01)
    assert by_key[("16x4", "1x1")][3] == pytest.approx(1.38, abs=0.01)


def test_trace_table_reference(ref_scenario):
    header, rows = trace_table(ref_scenario)
    assert header[0] == "n_fc"
    assert [r[0] for r in rows] == [1, 3, 5, 7]
