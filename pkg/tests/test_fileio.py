import json
import math

import numpy as np
import pytest

from qbg import bounds, extremal, fileio, sampling, state, transform


def test_matrix_round_trip(tmp_path):
    rho = sampling.hs_mixed(4, 3, 0)
    path = tmp_path / "m.json"
    fileio.write_matrix(path, rho.entries)
    back = fileio.read_matrix(path)
    assert np.array_equal(back, rho.entries)


def test_matrix_shape_check():
    with pytest.raises(Exception):
        fileio.matrix_from_json({"dim": 2, "re": [[1]], "im": [[0]]})


def test_bloch_round_trip():
    basis = state.gellmann_basis(3)
    v = state.bloch_vector(sampling.hs_mixed(3, 5, 1), basis)
    back = fileio.bloch_from_json(fileio.bloch_to_json(v))
    np.testing.assert_allclose(back.v_d, v.v_d)
    np.testing.assert_allclose(back.v_x, v.v_x)
    np.testing.assert_allclose(back.v_i, v.v_i)


def test_fmt_12_significant_digits():
    assert fileio.fmt(1 / 3) == "0.333333333333"
    assert fileio.fmt(0.0) == "0"
    assert fileio.fmt(1.5e-11) == "1.5e-11"


def test_boundary_csv_round_trip(tmp_path):
    curve = bounds.boundary_samples(5, 50)
    path = tmp_path / "b.csv"
    fileio.write_boundary_csv(path, curve)
    back = fileio.read_boundary_csv(path)
    assert len(back) == 50
    for orig, rt in zip(curve.samples, back):
        assert rt.region == orig.region
        assert rt.s_r == pytest.approx(orig.s_r, abs=1e-11)
        assert rt.s_i_max == pytest.approx(orig.s_i_max, abs=1e-11)


def test_boundary_svg_contains_regions():
    svg = fileio.boundary_to_svg(bounds.boundary_samples(5, 100))
    assert svg.startswith("<svg")
    assert svg.count("<polyline") == 3


def test_empirical_csv(tmp_path):
    emp = sampling.empirical_boundary(3, bins=8, n=50, seed=0)
    path = tmp_path / "e.csv"
    fileio.write_empirical_csv(path, emp)
    lines = path.read_text().splitlines()
    assert lines[0] == "s_r_bin_center,s_i_max_empirical"
    assert len(lines) == 9


def test_cloud_rows_and_read(tmp_path):
    recs = sampling.coordinate_cloud(3, 20, sampling.HS_MIXED, 1)
    path = tmp_path / "c.csv"
    with open(path, "w") as fh:
        fh.write(fileio.CLOUD_HEADER + "\n")
        for r in recs:
            fh.write(fileio.cloud_row(r) + "\n")
    back = fileio.read_cloud_csv(path)
    assert len(back) == 20
    assert back[7]["idx"] == 7
    assert back[7]["s_i"] == pytest.approx(recs[7].s_i, abs=1e-11)


def test_extremal_spec_parsing():
    spec = fileio.extremal_spec_from_json(
        {"family": "ODD_LINEAR", "dim": 5, "alpha": 0.22}
    )
    assert spec.family == "ODD_LINEAR"
    assert spec.alphas is None
    rho = extremal.build_state(spec)
    assert rho.dim == 5
    with pytest.raises(ValueError):
        fileio.extremal_spec_from_json({"family": "NOPE", "dim": 3})


def test_step_log_round_trip(tmp_path):
    rho = state.validate_density(np.diag([0.4, 0.3, 0.2, 0.1]).astype(complex))
    swept, steps = transform.sweep_uniform_diagonal(rho)
    path = tmp_path / "steps.jsonl"
    fileio.write_step_log(path, steps)
    back = fileio.read_step_log(path)
    assert back == steps
    replay = transform.apply_steps(rho, back)
    assert np.max(np.abs(replay.entries - swept.entries)) == 0.0


def test_saturation_json_serializable():
    rep = extremal.saturation_report(extremal.even_block([0.25, 0.25]))
    doc = json.dumps(fileio.saturation_to_json(rep))
    parsed = json.loads(doc)
    assert abs(parsed["verdict"]["quadratic_margin"]) <= 1e-10
    assert parsed["coordinates"]["s_i"] == pytest.approx(1.0)


def test_landmarks_json():
    doc = fileio.landmarks_to_json(bounds.landmarks(5))
    assert doc["odd_tangent"] == pytest.approx([0.5, math.sqrt(5) / 2])
    assert doc["even_intersection"] is None
