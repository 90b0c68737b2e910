"""Entropy-based correlation, coherence and uncertainty measures.

All quantities are reported in bits for two-qubit states in the helicity
basis.  The central entry point is :func:`measure_report`, which evaluates
every measure and audit at once from one eigendecomposition per matrix;
the individual functions expose the same quantities piecemeal.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .spin_algebra import (
    AXIS_NORM_TOL,
    EIGENVALUE_FLOOR,
    PAULI,
    TRACE_TOL,
    NotADensityMatrix,
    ZeroAxis,
    axis_operator,
    entropy_of_spectrum,
    hermitian_eigenvalues,
    local_dephase,
)

__all__ = [
    "ObservablePair",
    "DEFAULT_PAIR",
    "MeasureReport",
    "CcrAudit",
    "UncertaintyAudit",
    "IntrinsicAudit",
    "mutual_information",
    "rel_entropy_coherence",
    "conditional_entropy",
    "predictability_joint",
    "ccr_audit",
    "measured_conditional_entropy",
    "uncertainty_audit",
    "intrinsic_audit",
    "measure_report",
]

_OVERLAP_TOL = 1e-12


def _unit(axis) -> tuple:
    v = np.asarray(axis, dtype=float)
    if v.shape != (3,):
        raise ValueError(f"axis must have 3 components, got shape {v.shape}")
    norm = float(np.sqrt(v @ v))
    if norm < AXIS_NORM_TOL:
        raise ZeroAxis(f"axis norm {norm:.3e} below {AXIS_NORM_TOL:.0e}")
    return tuple(float(x) for x in v / norm)


@dataclass(frozen=True)
class ObservablePair:
    """Two single-qubit measurement axes in the (k, r, n) frame.

    ``c_overlap`` is the maximum squared overlap between the eigenbases of
    the two spin observables, (1 + |q . r|) / 2 for qubits; it equals 1/2
    exactly for mutually unbiased axes.
    """

    q_axis: tuple
    r_axis: tuple
    c_overlap: float

    def __post_init__(self):
        q = np.array(self.q_axis)
        r = np.array(self.r_axis)
        expected = (1.0 + abs(float(q @ r))) / 2.0
        if abs(self.c_overlap - expected) > _OVERLAP_TOL:
            raise ValueError(
                f"c_overlap = {self.c_overlap} inconsistent with axes (expected {expected})"
            )

    @classmethod
    def from_axes(cls, q_axis, r_axis) -> "ObservablePair":
        q = _unit(q_axis)
        r = _unit(r_axis)
        dot = q[0] * r[0] + q[1] * r[1] + q[2] * r[2]
        return cls(q_axis=q, r_axis=r, c_overlap=(1.0 + abs(dot)) / 2.0)


DEFAULT_PAIR = ObservablePair.from_axes((1.0, 0.0, 0.0), (0.0, 1.0, 0.0))


@dataclass(frozen=True)
class MeasureReport:
    """Every scalar measure and audit at one phase-space point (bits)."""

    qmi: float
    rec: float
    cond_entropy_a_given_b: float
    entropy_b: float
    pred_joint: float
    pred_a: float
    coh_a: float
    ccr_sum: float
    s_q_given_b: float
    s_r_given_b: float
    eur_lhs: float
    eur_rhs: float
    intrinsic_lhs: float
    intrinsic_rhs: float


@dataclass(frozen=True)
class CcrAudit:
    qmi: float
    cond_entropy: float
    pred_a: float
    coh_a: float
    ccr_sum: float


@dataclass(frozen=True)
class UncertaintyAudit:
    eur_lhs: float
    eur_rhs: float


@dataclass(frozen=True)
class IntrinsicAudit:
    intrinsic_lhs: float
    intrinsic_rhs: float


def _checked(rho):
    a = np.asarray(rho, dtype=complex)
    tr = a.trace()
    if abs(tr - 1.0) > TRACE_TOL:
        raise NotADensityMatrix(f"trace {tr} differs from 1 beyond {TRACE_TOL:.0e}")
    evals = hermitian_eigenvalues(a)
    if evals[-1] < EIGENVALUE_FLOOR:
        raise NotADensityMatrix(
            f"eigenvalue {evals[-1]:.3e} below floor {EIGENVALUE_FLOOR:.0e}"
        )
    return a, evals


def _marginal_a(a):
    return np.array(
        [
            [a[0, 0] + a[1, 1], a[0, 2] + a[1, 3]],
            [a[2, 0] + a[3, 1], a[2, 2] + a[3, 3]],
        ]
    )


def _marginal_b(a):
    return np.array(
        [
            [a[0, 0] + a[2, 2], a[0, 1] + a[2, 3]],
            [a[1, 0] + a[3, 2], a[1, 1] + a[3, 3]],
        ]
    )


def mutual_information(rho) -> float:
    """Total correlation between the two spins: S(A) + S(B) - S(AB)."""
    a, evals = _checked(rho)
    s_ab = entropy_of_spectrum(evals)
    s_a = entropy_of_spectrum(hermitian_eigenvalues(_marginal_a(a)))
    s_b = entropy_of_spectrum(hermitian_eigenvalues(_marginal_b(a)))
    return s_a + s_b - s_ab


def rel_entropy_coherence(rho) -> float:
    """Coherence in the helicity basis: S(diagonal part) - S(state)."""
    a, evals = _checked(rho)
    return entropy_of_spectrum(np.diag(a).real) - entropy_of_spectrum(evals)


def conditional_entropy(rho) -> float:
    """Conditional entropy S(A|B) = S(AB) - S(B); negative flags entanglement."""
    a, evals = _checked(rho)
    s_b = entropy_of_spectrum(hermitian_eigenvalues(_marginal_b(a)))
    return entropy_of_spectrum(evals) - s_b


def predictability_joint(rho) -> float:
    """Population predictability of the joint state: 2 - S(diagonal part)."""
    a, _ = _checked(rho)
    return 2.0 - entropy_of_spectrum(np.diag(a).real)


def ccr_audit(rho) -> CcrAudit:
    """Accounting identity splitting one bit among correlation terms.

    The sum qmi + S(A|B) + single-spin predictability + single-spin
    coherence equals log2(dim A) = 1 for every two-qubit state.
    """
    a, evals = _checked(rho)
    s_ab = entropy_of_spectrum(evals)
    rho_a = _marginal_a(a)
    s_a = entropy_of_spectrum(hermitian_eigenvalues(rho_a))
    s_b = entropy_of_spectrum(hermitian_eigenvalues(_marginal_b(a)))
    s_diag_a = entropy_of_spectrum(np.diag(rho_a).real)
    qmi = s_a + s_b - s_ab
    cond = s_ab - s_b
    pred_a = 1.0 - s_diag_a
    coh_a = s_diag_a - s_a
    return CcrAudit(
        qmi=qmi,
        cond_entropy=cond,
        pred_a=pred_a,
        coh_a=coh_a,
        ccr_sum=qmi + cond + pred_a + coh_a,
    )


def measured_conditional_entropy(rho, axis) -> float:
    """Conditional entropy of B after projectively measuring A along ``axis``."""
    a, _ = _checked(rho)
    s_b = entropy_of_spectrum(hermitian_eigenvalues(_marginal_b(a)))
    dephased = local_dephase(a, axis)
    return entropy_of_spectrum(hermitian_eigenvalues(dephased)) - s_b


def uncertainty_audit(rho, obs: ObservablePair = DEFAULT_PAIR) -> UncertaintyAudit:
    """Both sides of the memory-assisted entropic uncertainty bound."""
    s_q = measured_conditional_entropy(rho, obs.q_axis)
    s_r = measured_conditional_entropy(rho, obs.r_axis)
    return UncertaintyAudit(
        eur_lhs=s_q + s_r,
        eur_rhs=-math.log2(obs.c_overlap) + conditional_entropy(rho),
    )


def intrinsic_audit(rho, obs: ObservablePair = DEFAULT_PAIR) -> IntrinsicAudit:
    """Both sides of the combined uncertainty/coherence/predictability bound.

    With mutually unbiased axes the right-hand side is exactly 3 bits.
    """
    report = measure_report(rho, obs)
    return IntrinsicAudit(
        intrinsic_lhs=report.intrinsic_lhs, intrinsic_rhs=report.intrinsic_rhs
    )


def _report_with_min_eig(a, c_overlap, op_q, op_r):
    """All measures from one spectral pass per matrix; axes ops precomputed."""
    tr = a.trace()
    if abs(tr - 1.0) > TRACE_TOL:
        raise NotADensityMatrix(f"trace {tr} differs from 1 beyond {TRACE_TOL:.0e}")
    evals = hermitian_eigenvalues(a)
    if evals[-1] < EIGENVALUE_FLOOR:
        raise NotADensityMatrix(
            f"eigenvalue {evals[-1]:.3e} below floor {EIGENVALUE_FLOOR:.0e}"
        )
    s_ab = entropy_of_spectrum(evals)
    rho_a = _marginal_a(a)
    rho_b = _marginal_b(a)
    s_a = entropy_of_spectrum(hermitian_eigenvalues(rho_a))
    s_b = entropy_of_spectrum(hermitian_eigenvalues(rho_b))
    s_diag = entropy_of_spectrum(np.diag(a).real)
    s_diag_a = entropy_of_spectrum(np.diag(rho_a).real)

    dephased_q = (a + op_q @ a @ op_q) / 2.0
    dephased_r = (a + op_r @ a @ op_r) / 2.0
    s_q = entropy_of_spectrum(hermitian_eigenvalues(dephased_q)) - s_b
    s_r = entropy_of_spectrum(hermitian_eigenvalues(dephased_r)) - s_b

    qmi = s_a + s_b - s_ab
    cond = s_ab - s_b
    pred_joint = 2.0 - s_diag
    rec = s_diag - s_ab
    pred_a = 1.0 - s_diag_a
    coh_a = s_diag_a - s_a
    log_inv_c = -math.log2(c_overlap)
    report = MeasureReport(
        qmi=qmi,
        rec=rec,
        cond_entropy_a_given_b=cond,
        entropy_b=s_b,
        pred_joint=pred_joint,
        pred_a=pred_a,
        coh_a=coh_a,
        ccr_sum=qmi + cond + pred_a + coh_a,
        s_q_given_b=s_q,
        s_r_given_b=s_r,
        eur_lhs=s_q + s_r,
        eur_rhs=log_inv_c + cond,
        intrinsic_lhs=s_q + s_r + s_b + pred_joint + rec,
        intrinsic_rhs=log_inv_c + 2.0,
    )
    return report, float(evals[-1])


def measure_report(rho, obs: ObservablePair = DEFAULT_PAIR) -> MeasureReport:
    """Evaluate every measure and audit of one state in one pass."""
    a, _ = _checked(rho)
    op_q = np.kron(axis_operator(obs.q_axis), PAULI.identity2)
    op_r = np.kron(axis_operator(obs.r_axis), PAULI.identity2)
    report, _ = _report_with_min_eig(a, obs.c_overlap, op_q, op_r)
    return report
