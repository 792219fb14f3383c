import numpy as np
import pytest

from qbg import sampling, state, transform
from qbg.errors import DimensionMismatch, NotHermitian, NotPositive, TraceNotOne

SIGMA_Y = np.array([[0, -1j], [1j, 0]])


def random_states(d, n, seed=0):
    return [sampling.hs_mixed(d, seed, i) for i in range(n)]


# -- validation ---------------------------------------------------------------

def test_maximally_mixed_validates():
    for d in (2, 3, 5, 8):
        rho = state.validate_density(np.eye(d) / d)
        assert rho.dim == d


def test_negative_diagonal_rejected():
    with pytest.raises(NotPositive) as exc:
        state.validate_density(np.diag([1.2, -0.2]))
    assert exc.value.min_eigenvalue == pytest.approx(-0.2)


def test_sigma_y_surface_point_is_pure():
    rho = state.validate_density((np.eye(2) + SIGMA_Y) / 2)
    assert state.purity(rho) == pytest.approx(1.0, abs=1e-12)


def test_non_hermitian_rejected():
    with pytest.raises(NotHermitian):
        state.validate_density(np.array([[0.5, 0.1], [0.0, 0.5]]))


def test_wrong_trace_rejected():
    with pytest.raises(TraceNotOne):
        state.validate_density(np.eye(2))


def test_dimension_one_rejected():
    with pytest.raises(DimensionMismatch):
        state.validate_density(np.array([[1.0]]))


# -- decomposition -------------------------------------------------------------

def test_decompose_maximally_mixed_is_zero():
    parts = state.decompose(state.validate_density(np.eye(4) / 4))
    assert np.all(parts.diag == 0)
    assert np.all(parts.real_off == 0)
    assert np.all(parts.imag_off == 0)


def test_decompose_qubit_recovers_pauli_y():
    rho = state.validate_density((np.eye(2) + SIGMA_Y) / 2)
    parts = state.decompose(rho)
    np.testing.assert_allclose(parts.diag, 0, atol=1e-15)
    np.testing.assert_allclose(parts.real_off, 0, atol=1e-15)
    np.testing.assert_allclose(parts.imag_off, SIGMA_Y, atol=1e-15)


def test_decompose_uniform_alpha_family_d3():
    # alpha = 1/3: uniform diagonal, one imaginary block with entries -i/+i
    m = np.array(
        [[1 / 3, -1j / 3, 0], [1j / 3, 1 / 3, 0], [0, 0, 1 / 3]], dtype=complex
    )
    parts = state.decompose(state.validate_density(m))
    np.testing.assert_allclose(parts.diag, 0, atol=1e-15)
    np.testing.assert_allclose(parts.real_off, 0, atol=1e-15)
    want = np.zeros((3, 3), dtype=complex)
    want[0, 1], want[1, 0] = -1j, 1j
    np.testing.assert_allclose(parts.imag_off, want, atol=1e-15)


def test_recompose_zero_parts_is_maximally_mixed():
    d = 5
    parts = state.DxiParts(
        dim=d,
        diag=np.zeros(d),
        real_off=np.zeros((d, d)),
        imag_off=np.zeros((d, d), dtype=complex),
    )
    rho = state.recompose(parts)
    np.testing.assert_allclose(rho.entries, np.eye(d) / d, atol=1e-15)


def test_recompose_infeasible_triple_rejected():
    # I = 2 sigma_y gives eigenvalues (1 +/- 2)/2; smallest is -1/2
    parts = state.DxiParts(
        dim=2, diag=np.zeros(2), real_off=np.zeros((2, 2)), imag_off=2 * SIGMA_Y
    )
    with pytest.raises(NotPositive) as exc:
        state.recompose(parts)
    assert exc.value.min_eigenvalue == pytest.approx(-0.5, abs=1e-12)


def test_round_trip_random_states():
    for d in range(2, 8):
        for rho in random_states(d, 170, seed=d):
            back = state.recompose(state.decompose(rho))
            assert np.max(np.abs(back.entries - rho.entries)) <= 1e-12


# -- coordinates and purity -----------------------------------------------------

def test_coordinates_maximally_mixed():
    c = state.state_coordinates(state.validate_density(np.eye(3) / 3))
    assert (c.s_d, c.s_x, c.s_i) == (0, 0, 0)


def test_coordinates_qubit_imag_point():
    c = state.state_coordinates(state.validate_density((np.eye(2) + SIGMA_Y) / 2))
    assert (c.s_d, c.s_x) == (0, 0)
    assert c.s_i == pytest.approx(1.0, abs=1e-15)


def test_coordinates_even_block_saturation():
    # block weights (3/8, 1/8): imaginary blocks have spectra +/-3/2, +/-1/2
    m = np.zeros((4, 4), dtype=complex)
    for k, a in enumerate((3 / 8, 1 / 8)):
        i = 2 * k
        m[i, i] = m[i + 1, i + 1] = a
        m[i, i + 1], m[i + 1, i] = -1j * a, 1j * a
    c = state.state_coordinates(state.validate_density(m))
    assert c.s_d == pytest.approx(0.5, abs=1e-14)
    assert c.s_x == 0
    assert c.s_i == pytest.approx(np.sqrt(5) / 2, abs=1e-14)
    assert c.s_i**2 == pytest.approx(1 + c.s_r**2, abs=1e-12)


def test_coordinate_consistency_invariants():
    for d in (2, 4, 6):
        for rho in random_states(d, 20, seed=42 + d):
            c = state.state_coordinates(rho)
            assert c.s_r**2 == pytest.approx(c.s_d**2 + c.s_x**2, abs=1e-12)
            assert c.s_d**2 + c.s_x**2 + c.s_i**2 <= d - 1 + 1e-9


def test_purity_identity():
    for d in range(2, 8):
        for rho in random_states(d, 25, seed=100 + d):
            c = state.state_coordinates(rho)
            lhs = state.purity(rho)
            rhs = (1 + c.s_d**2 + c.s_x**2 + c.s_i**2) / d
            assert abs(lhs - rhs) <= 1e-12


def test_purity_alpha_family_d3():
    m = np.array(
        [[1 / 3, -1j / 3, 0], [1j / 3, 1 / 3, 0], [0, 0, 1 / 3]], dtype=complex
    )
    assert state.purity(state.validate_density(m)) == pytest.approx(5 / 9, abs=1e-14)


def test_purity_maximally_mixed():
    assert state.purity(state.validate_density(np.eye(5) / 5)) == pytest.approx(0.2)


def test_part_orthogonality():
    for d in (3, 5, 7):
        for rho in random_states(d, 20, seed=d):
            p = state.decompose(rho)
            dmat = np.diag(p.diag)
            assert abs(np.trace(dmat @ p.real_off)) <= 1e-12
            assert abs(np.trace(dmat @ p.imag_off)) <= 1e-12
            assert abs(np.trace(p.real_off @ p.imag_off)) <= 1e-12


def test_imag_part_eigenvalues_pair_up():
    for d in (3, 4, 6, 7):
        for rho in random_states(d, 20, seed=d):
            lam = np.linalg.eigvalsh(state.decompose(rho).imag_off)
            assert np.max(np.abs(lam + lam[::-1])) <= 1e-10
            if d % 2 == 1:
                assert abs(lam[d // 2]) <= 1e-10


def test_orthogonal_conjugation_trades_s_d_for_s_x_only():
    rng = np.random.default_rng(3)
    for d in (3, 5):
        for i, rho in enumerate(random_states(d, 10, seed=d)):
            c0 = state.state_coordinates(rho)
            k, l = rng.choice(d, size=2, replace=False)
            rot = transform.givens_conjugate(
                rho,
                transform.RotationStep(int(k), int(l), float(rng.uniform(0, np.pi))),
            )
            c1 = state.state_coordinates(rot)
            assert abs(c1.s_r - c0.s_r) <= 1e-10
            assert abs(c1.s_i - c0.s_i) <= 1e-10


def test_transposition_preserves_weights_and_validity():
    for d in (2, 5):
        for rho in random_states(d, 10, seed=50 + d):
            c0 = state.state_coordinates(rho)
            ct = state.state_coordinates(transform.transpose_state(rho))
            assert abs(ct.s_d - c0.s_d) <= 1e-12
            assert abs(ct.s_x - c0.s_x) <= 1e-12
            assert abs(ct.s_i - c0.s_i) <= 1e-12


# -- Bloch basis and vector ------------------------------------------------------

def test_gellmann_d2_is_pauli():
    basis = state.gellmann_basis(2)
    sz = np.diag([1.0, -1.0])
    sx = np.array([[0, 1], [1, 0]], dtype=complex)
    np.testing.assert_allclose(basis.diagonal[0], sz, atol=1e-15)
    np.testing.assert_allclose(basis.symmetric[0], sx, atol=1e-15)
    np.testing.assert_allclose(basis.antisymmetric[0], SIGMA_Y, atol=1e-15)


def test_gellmann_d3_normalization():
    basis = state.gellmann_basis(3)
    els = basis.elements()
    assert len(els) == 8
    for mu in els:
        assert np.trace(mu @ mu).real == pytest.approx(3.0, abs=1e-12)


@pytest.mark.parametrize("d", [2, 3, 4, 5, 6])
def test_gellmann_counts_and_orthogonality(d):
    basis = state.gellmann_basis(d)
    els = basis.elements()
    assert len(basis.diagonal) == d - 1
    assert len(basis.symmetric) == d * (d - 1) // 2
    assert len(basis.antisymmetric) == d * (d - 1) // 2
    assert len(els) == d * d - 1
    for mu in els:
        assert abs(np.trace(mu)) <= 1e-12
        assert np.max(np.abs(mu - mu.conj().T)) <= 1e-15
    gram = np.array(
        [[np.trace(a @ b.conj().T).real for b in els] for a in els]
    )
    np.testing.assert_allclose(gram, d * np.eye(d * d - 1), atol=1e-12)


def test_bloch_vector_maximally_mixed_is_zero():
    basis = state.gellmann_basis(4)
    v = state.bloch_vector(state.validate_density(np.eye(4) / 4), basis)
    for comp in (v.v_d, v.v_x, v.v_i):
        np.testing.assert_allclose(comp, 0, atol=1e-15)


def test_bloch_vector_qubit_imag_point():
    basis = state.gellmann_basis(2)
    v = state.bloch_vector(
        state.validate_density((np.eye(2) + SIGMA_Y) / 2), basis
    )
    np.testing.assert_allclose(v.v_d, [0], atol=1e-15)
    np.testing.assert_allclose(v.v_x, [0], atol=1e-15)
    np.testing.assert_allclose(v.v_i, [1], atol=1e-15)


def test_bloch_round_trip_and_norm_identities():
    for d in (2, 3, 5):
        basis = state.gellmann_basis(d)
        for rho in random_states(d, 10, seed=7 + d):
            v = state.bloch_vector(rho, basis)
            c = state.state_coordinates(rho)
            assert float(np.sum(v.v_d**2)) == pytest.approx(c.s_d**2, abs=1e-10)
            assert float(np.sum(v.v_x**2)) == pytest.approx(c.s_x**2, abs=1e-10)
            assert float(np.sum(v.v_i**2)) == pytest.approx(c.s_i**2, abs=1e-10)
            back = state.state_from_bloch(v, basis)
            assert np.max(np.abs(back.entries - rho.entries)) <= 1e-12


def test_state_from_bloch_zero_vector():
    d = 3
    basis = state.gellmann_basis(d)
    v = state.BlochVector(
        dim=d, v_d=np.zeros(d - 1), v_x=np.zeros(3), v_i=np.zeros(3)
    )
    rho = state.state_from_bloch(v, basis)
    np.testing.assert_allclose(rho.entries, np.eye(3) / 3, atol=1e-15)


def test_state_from_bloch_outside_body_rejected():
    # s_i = 1.5 exceeds the s_r = 0 cap sqrt(2/3) for d = 3
    d = 3
    basis = state.gellmann_basis(d)
    v = state.BlochVector(
        dim=d,
        v_d=np.zeros(d - 1),
        v_x=np.zeros(3),
        v_i=np.array([1.5, 0.0, 0.0]),
    )
    with pytest.raises(NotPositive):
        state.state_from_bloch(v, basis)


def test_bloch_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        state.bloch_vector(
            state.validate_density(np.eye(2) / 2), state.gellmann_basis(3)
        )
