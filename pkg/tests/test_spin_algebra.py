"""Tests for the fixed-size Hermitian algebra layer.

The eigensolver is checked against an independent oracle: characteristic
polynomial coefficients from the Faddeev-LeVerrier recursion evaluated in
50-digit arithmetic, with roots from mpmath's polynomial solver.
"""

import math

import mpmath
import numpy as np
import pytest

from ttqinfo.spin_algebra import (
    PAULI,
    NonHermitianInput,
    NotADensityMatrix,
    ZeroAxis,
    axis_operator,
    dephase_diagonal,
    hermitian_eigensystem,
    hermitian_eigenvalues,
    local_dephase,
    partial_trace,
    von_neumann_entropy,
)
from ttqinfo.qcd_production import Kinematics, gg_coefficients, assemble_density

SINGLET = np.array(
    [
        [0.0, 0.0, 0.0, 0.0],
        [0.0, 0.5, -0.5, 0.0],
        [0.0, -0.5, 0.5, 0.0],
        [0.0, 0.0, 0.0, 0.0],
    ],
    dtype=complex,
)

CLASSICAL_COPY = np.diag([0.5, 0.0, 0.0, 0.5]).astype(complex)


def charpoly_roots(matrix):
    """Oracle: eigenvalues as roots of the characteristic polynomial.

    Coefficients come from the Faddeev-LeVerrier recursion in 50-digit
    precision; roots from mpmath.polyroots.  Fully independent of the
    Jacobi route under test.
    """
    n = matrix.shape[0]
    with mpmath.workdps(50):
        a = mpmath.matrix(n, n)
        for i in range(n):
            for j in range(n):
                a[i, j] = mpmath.mpc(matrix[i, j])
        coeffs = [mpmath.mpf(1)]
        aux = mpmath.zeros(n, n)
        for k in range(1, n + 1):
            aux = a * aux
            for i in range(n):
                aux[i, i] += coeffs[-1]
            prod = a * aux
            trace = sum(prod[i, i] for i in range(n))
            coeffs.append(-trace / k)
        roots = mpmath.polyroots(coeffs, maxsteps=200, extraprec=120)
        return sorted((float(mpmath.re(r)) for r in roots), reverse=True)


def random_hermitian(rng, n, real=False):
    x = rng.standard_normal((n, n))
    if not real:
        x = x + 1j * rng.standard_normal((n, n))
    return (x + x.conj().T) / 2


def random_density(rng, n):
    h = random_hermitian(rng, n)
    w, v = np.linalg.eigh(h)
    w = np.abs(w)
    w = w / w.sum()
    return (v * w) @ v.conj().T


class TestPauliBasis:
    def test_each_sigma_hermitian_traceless_involutory(self):
        for sigma in (PAULI.sigma_k, PAULI.sigma_r, PAULI.sigma_n):
            assert np.abs(sigma - sigma.conj().T).max() < 1e-15
            assert abs(np.trace(sigma)) < 1e-15
            assert np.abs(sigma @ sigma - np.eye(2)).max() < 1e-15

    def test_frame_conventions(self):
        assert PAULI.sigma_k[0, 1] == 0 and PAULI.sigma_k[1, 0] == 0
        assert np.abs(PAULI.sigma_r.imag).max() == 0
        assert np.abs(PAULI.sigma_r - PAULI.sigma_r.T).max() == 0
        assert np.abs(PAULI.sigma_n.real).max() == 0
        assert np.abs(PAULI.sigma_n + PAULI.sigma_n.T).max() == 0


class TestEigensystem:
    def test_maximally_mixed(self):
        es = hermitian_eigensystem(np.eye(4) / 4)
        assert np.allclose(es.eigenvalues, [0.25, 0.25, 0.25, 0.25], atol=1e-14)

    def test_singlet_projector(self):
        es = hermitian_eigensystem(SINGLET)
        assert np.allclose(es.eigenvalues, [1.0, 0.0, 0.0, 0.0], atol=1e-14)

    @pytest.mark.parametrize("n", [2, 4])
    @pytest.mark.parametrize("real", [False, True])
    def test_eigenvalues_match_charpoly_oracle(self, n, real):
        rng = np.random.default_rng(100 * n + real)
        for _ in range(10):
            h = random_hermitian(rng, n, real=real)
            got = hermitian_eigenvalues(h)
            expected = charpoly_roots(h)
            assert np.max(np.abs(np.array(expected) - got)) < 1e-10

    def test_reconstruction_and_orthonormality(self):
        rng = np.random.default_rng(7)
        for n in (2, 4):
            for _ in range(25):
                h = random_hermitian(rng, n)
                es = hermitian_eigensystem(h)
                v = es.eigenvectors
                rebuilt = (v * es.eigenvalues) @ v.conj().T
                assert np.abs(rebuilt - h).max() < 1e-10
                assert np.abs(v.conj().T @ v - np.eye(n)).max() < 1e-10

    def test_descending_order_and_determinism(self):
        rng = np.random.default_rng(11)
        h = random_hermitian(rng, 4)
        first = hermitian_eigensystem(h)
        second = hermitian_eigensystem(h.copy())
        assert all(np.diff(first.eigenvalues) <= 0)
        assert np.array_equal(first.eigenvalues, second.eigenvalues)
        assert np.array_equal(first.eigenvectors, second.eigenvectors)

    def test_phase_normalization(self):
        rng = np.random.default_rng(13)
        es = hermitian_eigensystem(random_hermitian(rng, 4))
        for j in range(4):
            col = es.eigenvectors[:, j]
            lead = next(x for x in col if abs(x) > 1e-12)
            assert lead.real > 0
            assert abs(lead.imag) < 1e-12

    def test_rejects_non_hermitian(self):
        bad = np.eye(4, dtype=complex)
        bad[0, 1] = 1e-6
        with pytest.raises(NonHermitianInput):
            hermitian_eigensystem(bad)

    def test_accepts_tiny_asymmetry(self):
        almost = np.eye(4, dtype=complex) / 4
        almost[0, 1] = 1e-12
        hermitian_eigensystem(almost)

    def test_rejects_unsupported_size(self):
        with pytest.raises(ValueError):
            hermitian_eigensystem(np.eye(3))


class TestEntropy:
    def test_maximally_mixed_two_qubit(self):
        assert von_neumann_entropy(np.eye(4) / 4) == pytest.approx(2.0, abs=1e-12)

    def test_pure_state(self):
        assert von_neumann_entropy(SINGLET) == pytest.approx(0.0, abs=1e-12)

    def test_dyadic_spectrum(self):
        rho = np.diag([0.5, 0.25, 0.125, 0.125]).astype(complex)
        # direct -sum p log2 p: 0.5*1 + 0.25*2 + 2 * 0.125*3
        assert von_neumann_entropy(rho) == pytest.approx(1.75, abs=1e-12)

    def test_unitary_invariance(self):
        rng = np.random.default_rng(17)
        for _ in range(20):
            rho = random_density(rng, 4)
            base = von_neumann_entropy(rho)
            q, _ = np.linalg.qr(
                rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
            )
            rotated = q @ rho @ q.conj().T
            assert von_neumann_entropy(rotated) == pytest.approx(base, abs=1e-9)

    def test_rejects_wrong_trace(self):
        with pytest.raises(NotADensityMatrix):
            von_neumann_entropy(np.eye(4) / 2)

    def test_rejects_negative_eigenvalue(self):
        rho = np.diag([1.2, -0.2, 0.0, 0.0]).astype(complex)
        with pytest.raises(NotADensityMatrix):
            von_neumann_entropy(rho)

    def test_clips_roundoff_negatives(self):
        rho = np.diag([1.0 + 5e-11, -5e-11, 0.0, 0.0]).astype(complex)
        assert von_neumann_entropy(rho) == pytest.approx(0.0, abs=1e-8)


class TestPartialTrace:
    def test_maximally_mixed(self):
        assert np.abs(partial_trace(np.eye(4) / 4, "A") - np.eye(2) / 2).max() < 1e-15

    def test_singlet_marginal(self):
        assert np.abs(partial_trace(SINGLET, "B") - np.eye(2) / 2).max() < 1e-15

    def test_production_states_have_uniform_marginals(self):
        for m in (347.0, 500.0, 900.0):
            for theta in (0.2, 1.0, 1.5):
                rho = assemble_density(gg_coefficients(Kinematics(m, theta)))
                for keep in ("A", "B"):
                    dev = np.abs(partial_trace(rho, keep) - np.eye(2) / 2).max()
                    assert dev < 1e-12

    def test_rejects_bad_subsystem(self):
        with pytest.raises(ValueError):
            partial_trace(np.eye(4) / 4, "C")


class TestDephasing:
    def test_diagonal_input_unchanged(self):
        rho = np.diag([0.4, 0.3, 0.2, 0.1]).astype(complex)
        assert np.abs(dephase_diagonal(rho) - rho).max() == 0

    def test_singlet_diagonal(self):
        expected = np.diag([0.0, 0.5, 0.5, 0.0])
        assert np.abs(dephase_diagonal(SINGLET) - expected).max() < 1e-15

    def test_production_state_diagonal_matches_coefficients(self):
        kin = Kinematics(500.0, math.pi / 3)
        coeffs = gg_coefficients(kin)
        rho = assemble_density(coeffs)
        kk = coeffs.c_kk / coeffs.a_tilde
        expected = np.diag([(1 + kk) / 4, (1 - kk) / 4, (1 - kk) / 4, (1 + kk) / 4])
        assert np.abs(dephase_diagonal(rho) - expected).max() < 1e-14

    def test_never_decreases_entropy(self):
        rng = np.random.default_rng(23)
        for _ in range(25):
            rho = random_density(rng, 4)
            assert von_neumann_entropy(dephase_diagonal(rho)) >= (
                von_neumann_entropy(rho) - 1e-10
            )


class TestLocalDephase:
    def test_identity_fixed_point(self):
        for axis in [(1, 0, 0), (0, 1, 0), (0.3, -0.4, 0.5)]:
            out = local_dephase(np.eye(4) / 4, axis)
            assert np.abs(out - np.eye(4) / 4).max() < 1e-15

    def test_singlet_along_k(self):
        expected = np.diag([0.0, 0.5, 0.5, 0.0])
        assert np.abs(local_dephase(SINGLET, (1, 0, 0)) - expected).max() < 1e-15

    def test_classical_copy_along_r(self):
        # oracle: explicit eigenprojector sum P_+- = (I +- sigma_r)/2
        p_plus = (np.eye(2) + PAULI.sigma_r) / 2
        p_minus = (np.eye(2) - PAULI.sigma_r) / 2
        expected = sum(
            np.kron(p, np.eye(2)) @ CLASSICAL_COPY @ np.kron(p, np.eye(2))
            for p in (p_plus, p_minus)
        )
        got = local_dephase(CLASSICAL_COPY, (0, 1, 0))
        assert np.abs(got - expected).max() < 1e-15
        assert np.abs(got - np.eye(4) / 4).max() < 1e-15

    def test_matches_projector_sum_on_random_states(self):
        rng = np.random.default_rng(29)
        for _ in range(20):
            rho = random_density(rng, 4)
            axis = rng.standard_normal(3)
            op = axis_operator(axis)
            p_plus = (np.eye(2) + op) / 2
            p_minus = (np.eye(2) - op) / 2
            expected = sum(
                np.kron(p, np.eye(2)) @ rho @ np.kron(p, np.eye(2))
                for p in (p_plus, p_minus)
            )
            assert np.abs(local_dephase(rho, axis) - expected).max() < 1e-12

    def test_idempotent(self):
        rng = np.random.default_rng(31)
        for _ in range(10):
            rho = random_density(rng, 4)
            axis = rng.standard_normal(3)
            once = local_dephase(rho, axis)
            twice = local_dephase(once, axis)
            assert np.abs(twice - once).max() < 1e-12

    def test_preserves_b_marginal(self):
        rng = np.random.default_rng(37)
        for _ in range(10):
            rho = random_density(rng, 4)
            axis = rng.standard_normal(3)
            before = partial_trace(rho, "B")
            after = partial_trace(local_dephase(rho, axis), "B")
            assert np.abs(after - before).max() < 1e-12

    def test_zero_axis_rejected(self):
        with pytest.raises(ZeroAxis):
            local_dephase(np.eye(4) / 4, (0.0, 0.0, 1e-13))


class TestPipelineSpectra:
    def test_reconstruction_error_on_production_states(self):
        for m in (346.5, 420.0, 800.0):
            for theta in (0.1, 0.8, 1.5):
                rho = assemble_density(gg_coefficients(Kinematics(m, theta)))
                es = hermitian_eigensystem(rho)
                v = es.eigenvectors
                rebuilt = (v * es.eigenvalues) @ v.conj().T
                assert np.abs(rebuilt - rho).max() < 1e-10
