import json
import math

import numpy as np
import pytest

from qubitent.entanglement import ground_state_concurrence, thermal_concurrence
from qubitent.sweep import (
    FIGURE_IDS,
    DiagonalArgmaxReport,
    GridAxis,
    GridSpec,
    argmax_diagonal_check,
    compare_experiments,
    dataset_to_csv,
    figure_dataset,
    format_number,
    run_sweep,
    validity_warning,
    write_dataset,
)

SMALL_FIG_OVERRIDES = {
    "fig1": {"e_j": (0.0, 10.0, 21), "temps": (0.01, 1.0)},
    "fig2": {"t": (0.01, 20.0, 21), "e_js": (0.5, 5.0)},
    "fig3": {"e_j1": (0.0, 30.0, 7), "t": (0.01, 10.0, 5)},
    "fig4": {"e_j1": (0.5, 25.0, 8), "e_j2": (0.5, 25.0, 8)},
    "fig5": {"e_j1": (0.0, 30.0, 13)},
}


def test_grid_axis_validation():
    with pytest.raises(ValueError, match="unknown axis"):
        GridAxis("e_x", 0.0, 1.0, 5)
    with pytest.raises(ValueError, match="count"):
        GridAxis("e_j", 0.0, 1.0, 1)
    with pytest.raises(ValueError, match="start"):
        GridAxis("e_j", 1.0, 0.0, 5)
    with pytest.raises(ValueError, match="strictly positive"):
        GridAxis("t", 0.0, 1.0, 5)


def test_grid_spec_validation():
    axis = GridAxis("e_j", 0.0, 1.0, 3)
    with pytest.raises(ValueError, match="axis and fixed"):
        GridSpec(axes=(axis,), fixed={"e_j": 1.0})
    with pytest.raises(ValueError, match="excludes"):
        GridSpec(axes=(axis,), fixed={"e_j1": 1.0})
    with pytest.raises(ValueError, match="pin e_j"):
        GridSpec(axes=(GridAxis("t", 0.1, 1.0, 3),), fixed={"e_j1": 1.0})
    with pytest.raises(ValueError, match="unknown fixed"):
        GridSpec(axes=(axis,), fixed={"volume": 1.0})


def test_run_sweep_hot_rows_are_zero():
    spec = GridSpec(axes=(GridAxis("e_j", 0.0, 1.0, 2),), fixed={"t": 1e6, "e_m": 1.0})
    ds = run_sweep(spec)
    assert ds.columns == ("e_j", "e_m", "t", "concurrence")
    assert len(ds.rows) == 2
    for row in ds.rows:
        assert row[-1] == pytest.approx(0.0, abs=1e-9)


def test_run_sweep_zero_josephson_is_zero():
    spec = GridSpec(axes=(GridAxis("t", 0.5, 2.0, 3),), fixed={"e_j": 0.0})
    ds = run_sweep(spec)
    assert all(row[-1] == 0.0 for row in ds.rows)


def test_run_sweep_cold_plateau():
    spec = GridSpec(axes=(GridAxis("t", 0.001, 0.002, 2),), fixed={"e_j": 3.625})
    ds = run_sweep(spec)
    for row in ds.rows:
        assert row[-1] == pytest.approx(0.26593, abs=1e-3)


def test_run_sweep_ground_state_path_when_t_missing():
    spec = GridSpec(axes=(GridAxis("e_j", 0.5, 2.0, 4),), fixed={})
    ds = run_sweep(spec)
    assert ds.metadata["temperature_mode"] == "zero-limit"
    for row in ds.rows:
        assert row[-1] == pytest.approx(ground_state_concurrence(row[0], row[0], 1.0), abs=1e-12)


def test_run_sweep_two_axes_row_major():
    spec = GridSpec(
        axes=(GridAxis("e_j1", 1.0, 2.0, 2), GridAxis("e_j2", 3.0, 4.0, 3)),
        fixed={"t": 0.5},
    )
    ds = run_sweep(spec)
    assert len(ds.rows) == 6
    firsts = [row[0] for row in ds.rows]
    assert firsts == [1.0, 1.0, 1.0, 2.0, 2.0, 2.0]


def test_figure_ids_and_unknown_rejected():
    with pytest.raises(ValueError, match="unknown figure id"):
        figure_dataset("fig9")
    assert FIGURE_IDS == ("fig1", "fig2", "fig3", "fig4", "fig5")


def test_fig1_structure_and_marker():
    ds = figure_dataset("fig1", overrides=SMALL_FIG_OVERRIDES["fig1"])
    assert ds.columns[0] == "e_j"
    assert ds.columns[-2:] == ("expt_e_j", "expt_c")
    assert len(ds.rows) == 21
    assert ds.rows[0][-2:] == (3.625, 0.27)
    assert ds.rows[1][-2:] == (None, None)
    # every temperature curve starts at exactly zero and peaks at e_j > 0
    for index, name in enumerate(ds.columns):
        if name.startswith("c_t"):
            curve = [row[index] for row in ds.rows]
            assert curve[0] == 0.0
            assert max(curve) > 0.0 and curve.index(max(curve)) > 0


def test_fig2_cold_intercept():
    ds = figure_dataset("fig2", overrides=SMALL_FIG_OVERRIDES["fig2"])
    assert ds.columns[:2] == ("t", "e_m")
    assert ds.columns[2] == "c_ej0.5"
    assert ds.rows[0][2] == pytest.approx(0.894, abs=0.01)


def test_fig3_fixed_partner_energy():
    ds = figure_dataset("fig3", overrides=SMALL_FIG_OVERRIDES["fig3"])
    assert ds.metadata["fixed"]["e_j2"] == 17.2
    assert len(ds.rows) == 7 * 5
    assert ds.columns == ("e_j1", "t", "e_j2", "e_m", "concurrence")


def test_fig4_grid_and_symmetry():
    ds = figure_dataset("fig4", overrides=SMALL_FIG_OVERRIDES["fig4"])
    count = SMALL_FIG_OVERRIDES["fig4"]["e_j1"][2]
    assert len(ds.rows) == count * count
    values = {}
    for row in ds.rows:
        values[(row[0], row[1])] = row[-1]
    for (x, y), c in values.items():
        assert values[(y, x)] == pytest.approx(c, abs=1e-10)


def test_fig5_two_families():
    ds = figure_dataset("fig5", overrides=SMALL_FIG_OVERRIDES["fig5"])
    assert ds.columns[-2:] == ("c_ej2_eq_ej1", "c_ej2_17.2")
    for row in ds.rows:
        e_j1 = row[0]
        assert row[-2] == pytest.approx(thermal_concurrence(e_j1, e_j1, 1.0, 0.01), abs=1e-12)
        assert row[-1] == pytest.approx(thermal_concurrence(e_j1, 17.2, 1.0, 0.01), abs=1e-12)


def test_figure_concurrences_within_unit_interval():
    for figure_id, overrides in SMALL_FIG_OVERRIDES.items():
        ds = figure_dataset(figure_id, overrides=overrides)
        for row in ds.rows:
            for name, value in zip(ds.columns, row):
                if name == "concurrence" or name.startswith("c_"):
                    assert 0.0 <= value <= 1.0


def test_literal_temperature_mode():
    ds = figure_dataset("fig4", overrides=SMALL_FIG_OVERRIDES["fig4"], literal_t=True)
    assert ds.metadata["temperature_mode"] == "literal-operating-point"
    assert ds.metadata["fixed"]["t"] == 20.0


def test_determinism_byte_identical():
    first = dataset_to_csv(figure_dataset("fig5", overrides=SMALL_FIG_OVERRIDES["fig5"]))
    second = dataset_to_csv(figure_dataset("fig5", overrides=SMALL_FIG_OVERRIDES["fig5"]))
    assert first == second


def test_thread_env_does_not_change_bytes(monkeypatch):
    monkeypatch.setenv("QUBIT_SWEEP_THREADS", "1")
    serial = dataset_to_csv(figure_dataset("fig3", overrides=SMALL_FIG_OVERRIDES["fig3"]))
    monkeypatch.setenv("QUBIT_SWEEP_THREADS", "4")
    threaded = dataset_to_csv(figure_dataset("fig3", overrides=SMALL_FIG_OVERRIDES["fig3"]))
    assert serial == threaded


def test_compare_experiments_values():
    points = compare_experiments()
    assert [p.label for p in points] == ["identical qubits", "distinct qubits"]
    first, second = points
    assert first.computed_c == pytest.approx(0.26593, abs=1e-4)
    assert second.computed_c == pytest.approx(0.0648, abs=1e-3)
    for p in points:
        assert 0.0 <= p.computed_c <= 1.0
        assert p.within_tolerance


def test_argmax_report_matches_bruteforce():
    grid = np.arange(0.5, 10.0001, 0.05)
    report = argmax_diagonal_check(t=0.01, e_j2_values=(5.0,), e_j1_grid=grid)
    assert isinstance(report, DiagonalArgmaxReport)
    entry = report.entries[0]
    brute = [thermal_concurrence(x, 5.0, 1.0, 0.01) for x in grid]
    best = int(np.argmax(brute))
    assert entry.argmax_e_j1 == pytest.approx(float(grid[best]), abs=1e-12)
    assert entry.max_concurrence == pytest.approx(brute[best], abs=1e-12)
    assert entry.diagonal_concurrence == pytest.approx(
        thermal_concurrence(5.0, 5.0, 1.0, 0.01), abs=1e-10
    )
    assert entry.within_one_step == (abs(entry.argmax_e_j1 - 5.0) <= 0.05 * (1 + 1e-9))


def test_argmax_report_exchange_consistency():
    grid = np.arange(0.5, 6.0001, 0.25)
    report = argmax_diagonal_check(t=0.5, e_j2_values=(3.0,), e_j1_grid=grid)
    entry = report.entries[0]
    swapped = [thermal_concurrence(3.0, x, 1.0, 0.5) for x in grid]
    assert entry.max_concurrence == pytest.approx(max(swapped), abs=1e-10)


def test_validity_warning_thresholds():
    assert validity_warning(None) is None
    assert validity_warning(20.0) is None
    assert validity_warning(450.0) is None
    warning = validity_warning(500.0)
    assert warning is not None and "450" in warning


def test_validity_warning_attached_to_metadata():
    ds = figure_dataset("fig5", overrides=SMALL_FIG_OVERRIDES["fig5"], t_physical_mk=500.0)
    assert "450" in ds.metadata["validity_warning"]
    ds_ok = figure_dataset("fig5", overrides=SMALL_FIG_OVERRIDES["fig5"], t_physical_mk=20.0)
    assert "validity_warning" not in ds_ok.metadata


def test_format_number_contract():
    assert format_number(0.0) == "0"
    assert format_number(1.0) == "1"
    assert format_number(0.01) == "0.01"
    assert format_number(3.625) == "3.625"
    assert format_number(1e-5) == "1.00000000000e-05"
    assert format_number(0.26592899812581344) == "0.265928998126"
    # round trip at 12 significant digits
    for x in (0.26592899812581344, 1e-5, 123456.789, 2.0 / 3.0):
        assert format_number(float(format_number(x))) == format_number(x)


def test_csv_round_trip(tmp_path):
    ds = figure_dataset("fig5", overrides=SMALL_FIG_OVERRIDES["fig5"])
    path = tmp_path / "fig5.csv"
    write_dataset(ds, path, fmt="csv")
    text = path.read_text()
    assert "\r" not in text
    lines = text.splitlines()
    assert lines[0].split(",") == list(ds.columns)
    for line, row in zip(lines[1:], ds.rows):
        parsed = [float(field) for field in line.split(",")]
        for parsed_value, value in zip(parsed, row):
            assert format_number(parsed_value) == format_number(value)


def test_json_output_shape(tmp_path):
    ds = figure_dataset("fig1", overrides=SMALL_FIG_OVERRIDES["fig1"])
    path = tmp_path / "fig1.json"
    write_dataset(ds, path, fmt="json")
    payload = json.loads(path.read_text())
    assert set(payload) == {"metadata", "columns", "rows"}
    assert payload["columns"] == list(ds.columns)
    assert payload["rows"][1][-1] is None  # empty annotation slot
    assert payload["metadata"]["figure"] == "fig1"


def test_row_count_equals_axis_product():
    for figure_id, overrides in SMALL_FIG_OVERRIDES.items():
        ds = figure_dataset(figure_id, overrides=overrides)
        product = math.prod(axis["count"] for axis in ds.metadata["axes"])
        assert len(ds.rows) == product
