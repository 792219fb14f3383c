import numpy as np
import pytest

from qbg import extremal, sampling, state, transform
from qbg.errors import IndexOutOfRange

SIGMA_Y = np.array([[0, -1j], [1j, 0]])


def test_zero_angle_is_identity():
    rho = sampling.hs_mixed(4, 1, 0)
    out = transform.givens_conjugate(rho, transform.RotationStep(0, 2, 0.0))
    np.testing.assert_allclose(out.entries, rho.entries, atol=1e-15)


def test_quarter_turn_on_diagonal_qubit():
    rho = state.validate_density(np.diag([0.75, 0.25]).astype(complex))
    out = transform.givens_conjugate(rho, transform.RotationStep(0, 1, np.pi / 4))
    np.testing.assert_allclose(np.diag(out.entries).real, [0.5, 0.5], atol=1e-15)
    assert abs(out.entries[0, 1]) == pytest.approx(0.25, abs=1e-15)
    c0 = state.state_coordinates(rho)
    c1 = state.state_coordinates(out)
    assert c0.s_d == pytest.approx(0.5)
    assert (c1.s_d, c1.s_x) == pytest.approx((0.0, 0.5), abs=1e-14)
    assert c1.s_r == pytest.approx(c0.s_r, abs=1e-14)


def test_full_turn_is_identity():
    rho = sampling.hs_mixed(5, 2, 3)
    out = transform.givens_conjugate(rho, transform.RotationStep(1, 3, 2 * np.pi))
    assert np.max(np.abs(out.entries - rho.entries)) <= 1e-14


def test_rotation_preserves_spectrum_and_weights():
    rng = np.random.default_rng(17)
    for d in (3, 6):
        rho = sampling.hs_mixed(d, 5, 0)
        lam0 = np.linalg.eigvalsh(rho.entries)
        c0 = state.state_coordinates(rho)
        cur = rho
        for _ in range(100):
            k, l = map(int, rng.choice(d, size=2, replace=False))
            cur = transform.givens_conjugate(
                cur, transform.RotationStep(k, l, float(rng.uniform(0, 2 * np.pi)))
            )
        assert np.max(np.abs(np.linalg.eigvalsh(cur.entries) - lam0)) <= 1e-10
        c1 = state.state_coordinates(cur)
        assert abs(c1.s_r - c0.s_r) <= 1e-10
        assert abs(c1.s_i - c0.s_i) <= 1e-10


def test_bad_indices_rejected():
    rho = sampling.hs_mixed(3, 0, 0)
    with pytest.raises(IndexOutOfRange):
        transform.givens_conjugate(rho, transform.RotationStep(0, 3, 0.1))
    with pytest.raises(IndexOutOfRange):
        transform.givens_conjugate(rho, transform.RotationStep(1, 1, 0.1))


# -- diagonal sweep ------------------------------------------------------------

def test_sweep_maximally_mixed_no_steps():
    rho = state.validate_density(np.eye(4) / 4)
    out, steps = transform.sweep_uniform_diagonal(rho)
    assert steps == []
    np.testing.assert_allclose(out.entries, rho.entries)


def test_sweep_qubit_single_quarter_turn():
    rho = state.validate_density(np.diag([0.75, 0.25]).astype(complex))
    out, steps = transform.sweep_uniform_diagonal(rho)
    assert len(steps) == 1
    assert (steps[0].k, steps[0].l) == (0, 1)
    assert steps[0].theta == pytest.approx(np.pi / 4, abs=1e-9)
    np.testing.assert_allclose(np.diag(out.entries).real, 0.5, atol=1e-8)


def test_sweep_diagonal_d4():
    rho = state.validate_density(np.diag([0.4, 0.3, 0.2, 0.1]).astype(complex))
    out, steps = transform.sweep_uniform_diagonal(rho)
    assert np.max(np.abs(np.diag(out.entries).real - 0.25)) <= 1e-8
    c0 = state.state_coordinates(rho)
    c1 = state.state_coordinates(out)
    assert abs(c1.s_r - c0.s_r) <= 1e-10
    assert abs(c1.s_i - c0.s_i) <= 1e-10


def test_sweep_block_state_moves_weight_to_real_off_diagonal():
    rho = extremal.odd_block_zero([0.5])
    c0 = state.state_coordinates(rho)
    out, _ = transform.sweep_uniform_diagonal(rho)
    c1 = state.state_coordinates(out)
    assert c1.s_d <= 1e-8
    assert c1.s_x == pytest.approx(c0.s_r, abs=1e-8)


def test_sweep_random_states_contract():
    for d in range(2, 7):
        for i in range(20):
            rho = sampling.hs_mixed(d, 100 + d, i)
            c0 = state.state_coordinates(rho)
            out, steps = transform.sweep_uniform_diagonal(rho)
            assert np.max(np.abs(np.diag(out.entries).real - 1 / d)) <= 1e-8
            c1 = state.state_coordinates(out)
            assert abs(c1.s_r - c0.s_r) <= 1e-10
            assert abs(c1.s_i - c0.s_i) <= 1e-10
            assert abs((c1.s_d**2 + c1.s_x**2) - c0.s_r**2) <= 1e-9
            replay = transform.apply_steps(rho, steps)
            assert np.max(np.abs(replay.entries - out.entries)) <= 1e-12


def test_sweep_uniform_diagonal_with_offdiagonal_content():
    # already-uniform diagonal: nothing to do regardless of coherences
    rho = extremal.odd_linear(5, 0.2)
    c0 = state.state_coordinates(rho)
    out, steps = transform.sweep_uniform_diagonal(rho)
    assert steps == []
    assert state.state_coordinates(out) == c0


def test_step_count_stays_small():
    # each rotation pins one diagonal entry; d-1 steps suffice
    for d in (3, 5, 7):
        rho = sampling.hs_mixed(d, 9, 0)
        _, steps = transform.sweep_uniform_diagonal(rho)
        assert len(steps) <= 2 * d


# -- transposition ------------------------------------------------------------

def test_transpose_real_state_unchanged():
    rho = state.validate_density(np.diag([0.6, 0.4]).astype(complex))
    out = transform.transpose_state(rho)
    np.testing.assert_allclose(out.entries, rho.entries)


def test_transpose_flips_imag_part():
    rho = state.validate_density((np.eye(2) + SIGMA_Y) / 2)
    out = transform.transpose_state(rho)
    np.testing.assert_allclose(out.entries, (np.eye(2) - SIGMA_Y) / 2, atol=1e-15)
    p0 = state.decompose(rho)
    p1 = state.decompose(out)
    np.testing.assert_allclose(p1.imag_off, -p0.imag_off, atol=1e-15)
    np.testing.assert_allclose(p1.real_off, p0.real_off, atol=1e-15)


def test_transpose_overlap_identity():
    # d Tr(rho rho^T) = 1 + s_r^2 - s_i^2
    for d in (2, 3, 5, 7):
        for i in range(20):
            rho = sampling.hs_mixed(d, 31, i)
            c = state.state_coordinates(rho)
            lhs = d * float(np.trace(rho.entries @ rho.entries.T).real)
            assert abs(lhs - (1 + c.s_r**2 - c.s_i**2)) <= 1e-12


def test_double_transpose_identity():
    rho = sampling.hs_mixed(4, 77, 0)
    out = transform.transpose_state(transform.transpose_state(rho))
    assert np.array_equal(out.entries, rho.entries)
