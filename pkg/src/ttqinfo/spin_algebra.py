"""Exact-size Hermitian linear algebra for two-qubit spin states.

Everything here works on 4x4 (joint) and 2x2 (reduced) complex Hermitian
matrices.  Conventions used throughout the package:

* computational basis ``|++>, |+->, |-+>, |-->`` along the helicity axis k,
  with the first tensor slot belonging to the top quark (subsystem A);
* spin axes are expressed in the (k, r, n) frame, where sigma_k is diagonal,
  sigma_r is the real symmetric Pauli matrix and sigma_n the imaginary one;
* all entropies are in bits (base-2 logarithms).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "NonHermitianInput",
    "NotADensityMatrix",
    "ZeroAxis",
    "PauliBasis",
    "PAULI",
    "EigenSystem",
    "hermitian_eigensystem",
    "hermitian_eigenvalues",
    "von_neumann_entropy",
    "entropy_of_spectrum",
    "partial_trace",
    "dephase_diagonal",
    "local_dephase",
    "axis_operator",
]

HERMITICITY_TOL = 1e-9
TRACE_TOL = 1e-12
EIGENVALUE_FLOOR = -1e-10
AXIS_NORM_TOL = 1e-12
_JACOBI_TOL = 1e-14
_MAX_SWEEPS = 60


class NonHermitianInput(ValueError):
    """Input matrix is not Hermitian within tolerance."""


class NotADensityMatrix(ValueError):
    """Matrix fails the trace or positivity requirements of a quantum state."""


class ZeroAxis(ValueError):
    """Measurement axis has (numerically) zero length."""


def _as_square(m, name="matrix"):
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"{name} must be square, got shape {a.shape}")
    if a.shape[0] not in (2, 4):
        raise ValueError(f"{name} must be 2x2 or 4x4, got {a.shape[0]}x{a.shape[0]}")
    return a


def _check_hermitian(a, tol=HERMITICITY_TOL, name="matrix"):
    dev = np.abs(a - a.conj().T).max()
    if dev > tol:
        raise NonHermitianInput(f"{name} deviates from Hermiticity by {dev:.3e}")


@dataclass(frozen=True)
class PauliBasis:
    """The 2x2 operator basis of the (k, r, n) spin frame."""

    identity2: np.ndarray
    sigma_k: np.ndarray
    sigma_r: np.ndarray
    sigma_n: np.ndarray
    ordering: str = "axes (k, r, n); basis |++>,|+->,|-+>,|-->; first slot = top"


PAULI = PauliBasis(
    identity2=np.eye(2, dtype=complex),
    sigma_k=np.array([[1, 0], [0, -1]], dtype=complex),
    sigma_r=np.array([[0, 1], [1, 0]], dtype=complex),
    sigma_n=np.array([[0, -1j], [1j, 0]], dtype=complex),
)


@dataclass
class EigenSystem:
    """Spectral decomposition with eigenvalues sorted descending.

    ``eigenvectors[:, i]`` is the unit eigenvector paired with
    ``eigenvalues[i]``; its first component above 1e-12 in magnitude is
    phase-normalized to be real positive, and exact eigenvalue ties are
    broken by lexicographic comparison of the normalized vectors.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def _jacobi_complex(flat, n, want_vectors):
    """Cyclic Jacobi sweeps on a flattened complex Hermitian matrix.

    Each rotation absorbs the phase of the pivot entry and then applies the
    classic symmetric Jacobi rotation; iteration stops once the off-diagonal
    Frobenius norm drops below 1e-14 (scaled by the matrix norm for inputs
    larger than unit scale).
    """
    A = list(flat)
    if want_vectors:
        V = [0j] * (n * n)
        for i in range(n):
            V[i * n + i] = 1 + 0j
    else:
        V = None
    fro = math.sqrt(sum(x.real * x.real + x.imag * x.imag for x in A))
    thresh2 = (_JACOBI_TOL * max(1.0, fro)) ** 2
    for _ in range(_MAX_SWEEPS):
        off2 = 0.0
        for p in range(n - 1):
            for q in range(p + 1, n):
                x = A[p * n + q]
                off2 += x.real * x.real + x.imag * x.imag
        if off2 < thresh2:
            evals = [A[i * n + i].real for i in range(n)]
            return evals, V
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p * n + q]
                r = abs(apq)
                if r == 0.0:
                    continue
                phase = apq / r
                app = A[p * n + p].real
                aqq = A[q * n + q].real
                tau = (aqq - app) / (2.0 * r)
                if tau >= 0.0:
                    t = 1.0 / (tau + math.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                sp = s * phase
                sc = s / phase
                cp = c * phase
                for j in range(n):
                    ap = A[p * n + j]
                    aq = A[q * n + j]
                    A[p * n + j] = c * ap - sp * aq
                    A[q * n + j] = s * ap + cp * aq
                for i in range(n):
                    ap = A[i * n + p]
                    aq = A[i * n + q]
                    A[i * n + p] = c * ap - sc * aq
                    A[i * n + q] = s * ap + c * aq / phase
                if want_vectors:
                    for i in range(n):
                        vp = V[i * n + p]
                        vq = V[i * n + q]
                        V[i * n + p] = c * vp - sc * vq
                        V[i * n + q] = s * vp + c * vq / phase
    raise RuntimeError("Jacobi iteration did not converge in 60 sweeps")


def _jacobi_real(flat, n, want_vectors):
    """Real-symmetric fast path of :func:`_jacobi_complex`."""
    A = list(flat)
    if want_vectors:
        V = [0.0] * (n * n)
        for i in range(n):
            V[i * n + i] = 1.0
    else:
        V = None
    fro = math.sqrt(sum(x * x for x in A))
    thresh2 = (_JACOBI_TOL * max(1.0, fro)) ** 2
    for _ in range(_MAX_SWEEPS):
        off2 = 0.0
        for p in range(n - 1):
            for q in range(p + 1, n):
                x = A[p * n + q]
                off2 += x * x
        if off2 < thresh2:
            evals = [A[i * n + i] for i in range(n)]
            return evals, V
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p * n + q]
                if apq == 0.0:
                    continue
                app = A[p * n + p]
                aqq = A[q * n + q]
                tau = (aqq - app) / (2.0 * apq)
                if tau >= 0.0:
                    t = 1.0 / (tau + math.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                for j in range(n):
                    ap = A[p * n + j]
                    aq = A[q * n + j]
                    A[p * n + j] = c * ap - s * aq
                    A[q * n + j] = s * ap + c * aq
                for i in range(n):
                    ap = A[i * n + p]
                    aq = A[i * n + q]
                    A[i * n + p] = c * ap - s * aq
                    A[i * n + q] = s * ap + c * aq
                if want_vectors:
                    for i in range(n):
                        vp = V[i * n + p]
                        vq = V[i * n + q]
                        V[i * n + p] = c * vp - s * vq
                        V[i * n + q] = s * vp + c * vq
    raise RuntimeError("Jacobi iteration did not converge in 60 sweeps")


def _vector_sort_key(col):
    """Phase-normalize a complex column and return a lexicographic key."""
    for x in col:
        if abs(x) > 1e-12:
            col = [v * (x.conjugate() / abs(x)) for v in col]
            break
    return tuple((v.real, v.imag) for v in col)


def hermitian_eigensystem(m) -> EigenSystem:
    """Eigendecomposition of a 2x2 or 4x4 Hermitian matrix via cyclic Jacobi.

    Raises NonHermitianInput if the matrix deviates from Hermiticity by more
    than 1e-9.  Ordering is deterministic: descending eigenvalue, exact ties
    broken by comparing phase-normalized eigenvectors.
    """
    a = _as_square(m)
    _check_hermitian(a)
    n = a.shape[0]
    if np.abs(a.imag).max() == 0.0:
        evals, vflat = _jacobi_real(a.real.flatten().tolist(), n, True)
        cols = [[complex(vflat[i * n + j]) for i in range(n)] for j in range(n)]
    else:
        evals, vflat = _jacobi_complex(a.flatten().tolist(), n, True)
        cols = [[vflat[i * n + j] for i in range(n)] for j in range(n)]
    order = sorted(range(n), key=lambda j: (-evals[j], _vector_sort_key(cols[j])))
    values = np.array([evals[j] for j in order])
    vectors = np.empty((n, n), dtype=complex)
    for out_j, j in enumerate(order):
        col = cols[j]
        for x in col:
            if abs(x) > 1e-12:
                ph = x.conjugate() / abs(x)
                col = [v * ph for v in col]
                break
        vectors[:, out_j] = col
    return EigenSystem(eigenvalues=values, eigenvectors=vectors)


def hermitian_eigenvalues(m) -> np.ndarray:
    """Eigenvalues only (descending), skipping eigenvector accumulation."""
    a = _as_square(m)
    _check_hermitian(a)
    n = a.shape[0]
    if np.abs(a.imag).max() == 0.0:
        evals, _ = _jacobi_real(a.real.flatten().tolist(), n, False)
    else:
        evals, _ = _jacobi_complex(a.flatten().tolist(), n, False)
    evals.sort(reverse=True)
    return np.array(evals)


def entropy_of_spectrum(eigenvalues) -> float:
    """Shannon entropy in bits of a probability spectrum.

    Eigenvalues in (-1e-10, 0] are treated as exact zeros (0 log 0 = 0);
    anything more negative is rejected as unphysical.
    """
    total = 0.0
    for p in eigenvalues:
        p = float(p)
        if p <= 0.0:
            if p < EIGENVALUE_FLOOR:
                raise NotADensityMatrix(f"eigenvalue {p:.3e} below floor {EIGENVALUE_FLOOR:.0e}")
            continue
        total -= p * math.log2(p)
    return total


def _validated_spectrum(rho, name="rho"):
    a = _as_square(rho, name)
    tr = a.trace()
    if abs(tr - 1.0) > TRACE_TOL:
        raise NotADensityMatrix(f"{name} has trace {tr}, expected 1 within {TRACE_TOL:.0e}")
    evals = hermitian_eigenvalues(a)
    if evals[-1] < EIGENVALUE_FLOOR:
        raise NotADensityMatrix(
            f"{name} has eigenvalue {evals[-1]:.3e} below floor {EIGENVALUE_FLOOR:.0e}"
        )
    return a, evals


def von_neumann_entropy(rho) -> float:
    """Von Neumann entropy in bits of a density matrix (spectral route)."""
    _, evals = _validated_spectrum(rho)
    return entropy_of_spectrum(evals)


def partial_trace(rho, keep: str) -> np.ndarray:
    """Reduced state of one qubit of a two-qubit density matrix.

    ``keep`` selects the surviving subsystem: "A" is the first tensor slot
    (top quark), "B" the second (antitop).
    """
    a, _ = _validated_spectrum(rho)
    if a.shape[0] != 4:
        raise ValueError("partial_trace expects a 4x4 joint state")
    if keep == "A":
        return np.array(
            [
                [a[0, 0] + a[1, 1], a[0, 2] + a[1, 3]],
                [a[2, 0] + a[3, 1], a[2, 2] + a[3, 3]],
            ]
        )
    if keep == "B":
        return np.array(
            [
                [a[0, 0] + a[2, 2], a[0, 1] + a[2, 3]],
                [a[1, 0] + a[3, 2], a[1, 1] + a[3, 3]],
            ]
        )
    raise ValueError(f"keep must be 'A' or 'B', got {keep!r}")


def dephase_diagonal(rho) -> np.ndarray:
    """Remove all coherences in the computational (helicity) basis."""
    a, _ = _validated_spectrum(rho)
    return np.diag(np.diag(a))


def axis_operator(axis) -> np.ndarray:
    """The 2x2 spin operator for a direction given in (k, r, n) components."""
    v = np.asarray(axis, dtype=float)
    if v.shape != (3,):
        raise ValueError(f"axis must have 3 components, got shape {v.shape}")
    norm = float(np.sqrt(v @ v))
    if norm < AXIS_NORM_TOL:
        raise ZeroAxis(f"axis norm {norm:.3e} below {AXIS_NORM_TOL:.0e}")
    v = v / norm
    return v[0] * PAULI.sigma_k + v[1] * PAULI.sigma_r + v[2] * PAULI.sigma_n


def local_dephase(rho, axis) -> np.ndarray:
    """Projective dephasing of subsystem A along a spin axis.

    Returns sum_i (P_i x I) rho (P_i x I) with P_i the eigenprojectors of the
    axis operator; equals (rho + (N x I) rho (N x I)) / 2 for N the unit axis
    operator.  The B marginal is untouched.
    """
    a, _ = _validated_spectrum(rho)
    if a.shape[0] != 4:
        raise ValueError("local_dephase expects a 4x4 joint state")
    big_n = np.kron(axis_operator(axis), PAULI.identity2)
    return (a + big_n @ a @ big_n) / 2.0
