"""Analytic cross-check expressions for mutual information and coherence.

These reproduce, channel coefficient by channel coefficient, the published
closed forms for the two-channel mixture, as an independent check on the
spectral route.  The mixed-weight expressions are evaluated exactly as
printed; their first logarithm carries a minus sign between the two channel
terms where the matching eigenvalue of the mixed state is a weighted *sum*,
so a :class:`DomainError` (negative log argument) or a flagged discrepancy
is the expected outcome over much of the mixed-weight region.  That outcome
is reported as data, never silently corrected.

For a pure channel (weight exactly 0 or 1) the expressions reduce to the
single surviving channel's eigenvalue form, which is how they are evaluated
here; in that regime they agree with the spectral route to near machine
precision.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .qcd_production import (
    Kinematics,
    MixtureWeights,
    ProductionCoefficients,
    gg_coefficients,
    qqbar_coefficients,
)

__all__ = [
    "NegativeRadicand",
    "DomainError",
    "ChannelPairInput",
    "Discriminant",
    "ClosedFormCheck",
    "discriminant",
    "discriminant_terms",
    "qmi_closed",
    "rec_closed",
    "closed_form_check",
]

_LN2 = math.log(2.0)
_RADICAND_CLAMP = -1e-12


class NegativeRadicand(ValueError):
    """Discriminant radicand is negative beyond roundoff: bad coefficients."""


class DomainError(ArithmeticError):
    """A logarithm argument of the printed mixed-weight expression is <= 0."""


@dataclass(frozen=True)
class ChannelPairInput:
    """Both channels' coefficients at one kinematic point, plus weights."""

    coeffs_gg: ProductionCoefficients
    coeffs_qq: ProductionCoefficients
    weights: MixtureWeights

    def __post_init__(self):
        if self.coeffs_gg.channel != "gg":
            raise ValueError("coeffs_gg must come from the gg channel")
        if self.coeffs_qq.channel != "qqbar":
            raise ValueError("coeffs_qq must come from the qqbar channel")

    @classmethod
    def at_point(cls, kin: Kinematics, weights: MixtureWeights) -> "ChannelPairInput":
        """Evaluate both channels at the same kinematics (the safe constructor)."""
        return cls(
            coeffs_gg=gg_coefficients(kin),
            coeffs_qq=qqbar_coefficients(kin),
            weights=weights,
        )


@dataclass(frozen=True)
class Discriminant:
    """Pieces of the square root entering the paired-block eigenvalues."""

    f1_gg: float
    f1_qq: float
    q_value: float


def discriminant_terms(
    cg: ProductionCoefficients,
    cq: ProductionCoefficients,
    w_gg: float,
    w_qq: float,
) -> Discriminant:
    """Discriminant with explicit weights (degenerate weights allowed)."""
    f1_gg = w_gg**2 * cq.a_tilde**2 * (
        4.0 * cg.c_rk**2 + (cg.c_rr - cg.c_kk) ** 2
    )
    f1_qq = w_qq**2 * cg.a_tilde**2 * (
        4.0 * cq.c_rk**2 + (cq.c_rr - cq.c_kk) ** 2
    )
    cross = 2.0 * w_gg * w_qq * cg.a_tilde * cq.a_tilde * (
        4.0 * cg.c_rk * cq.c_rk + (cq.c_rr - cq.c_kk) * (cg.c_rr - cg.c_kk)
    )
    radicand = f1_gg + f1_qq + cross
    if radicand < 0.0:
        if radicand < _RADICAND_CLAMP:
            raise NegativeRadicand(f"radicand = {radicand:.3e}")
        radicand = 0.0
    return Discriminant(f1_gg=f1_gg, f1_qq=f1_qq, q_value=math.sqrt(radicand))


def discriminant(inp: ChannelPairInput) -> Discriminant:
    """Discriminant of a channel-pair input."""
    return discriminant_terms(
        inp.coeffs_gg, inp.coeffs_qq, inp.weights.w_gg, inp.weights.w_qqbar
    )


def _channel_eigenvalues(c: ProductionCoefficients):
    """Closed-form eigenvalues of one channel's normalized state."""
    a = c.a_tilde
    root = math.sqrt(4.0 * c.c_rk**2 + (c.c_rr - c.c_kk) ** 2)
    return (
        (a + c.c_rr - c.c_nn + c.c_kk) / (4.0 * a),
        (a - c.c_rr - c.c_nn - c.c_kk) / (4.0 * a),
        (a + c.c_nn - root) / (4.0 * a),
        (a + c.c_nn + root) / (4.0 * a),
    )


def _entropy_bits(values) -> float:
    total = 0.0
    for p in values:
        if p > 0.0:
            total -= p * math.log2(p)
    return total


def _mixed_log_terms(inp: ChannelPairInput):
    """(multiplier, log-argument) pairs of the printed mixture expressions."""
    cg, cq = inp.coeffs_gg, inp.coeffs_qq
    wg, wq = inp.weights.w_gg, inp.weights.w_qqbar
    ag, aq = cg.a_tilde, cq.a_tilde
    q_value = discriminant(inp).q_value

    sum_g = cg.a_tilde + cg.c_rr - cg.c_nn + cg.c_kk
    sum_q = cq.a_tilde + cq.c_rr - cq.c_nn + cq.c_kk
    t1 = wg * aq * sum_g + wq * ag * sum_q
    l1 = wg * sum_g / (4.0 * ag) - wq * sum_q / (4.0 * aq)

    trace_g = cg.c_rr + cg.c_nn + cg.c_kk
    trace_q = cq.c_rr + cq.c_nn + cq.c_kk
    t2 = ag * aq - wg * aq * trace_g - wq * ag * trace_q
    l2 = 0.25 - wg * trace_g / (4.0 * ag) - wq * trace_q / (4.0 * aq)

    base = wq * ag * (aq + cq.c_nn) + wg * aq * (ag + cg.c_nn)
    t3_minus = base - q_value
    t3_plus = base + q_value
    scale = 4.0 * ag * aq
    return [
        (t1, l1),
        (t2, l2),
        (t3_minus, t3_minus / scale),
        (t3_plus, t3_plus / scale),
    ]


def _log_sum(terms) -> float:
    """Sum of T * ln(L) with the 0 * ln(...) = 0 convention."""
    acc = 0.0
    for mult, arg in terms:
        if mult == 0.0:
            continue
        if arg <= 0.0:
            raise DomainError(f"log argument {arg:.6e} with multiplier {mult:.6e}")
        acc += mult * math.log(arg)
    return acc


def qmi_closed(inp: ChannelPairInput) -> float:
    """Mutual information from the printed closed form (bits)."""
    wg = inp.weights.w_gg
    if wg == 1.0 or wg == 0.0:
        surviving = inp.coeffs_gg if wg == 1.0 else inp.coeffs_qq
        return 2.0 - _entropy_bits(_channel_eigenvalues(surviving))
    scale = 4.0 * inp.coeffs_gg.a_tilde * inp.coeffs_qq.a_tilde
    return 2.0 + _log_sum(_mixed_log_terms(inp)) / (scale * _LN2)


def rec_closed(inp: ChannelPairInput) -> float:
    """Helicity-basis coherence from the printed closed form (bits)."""
    cg, cq = inp.coeffs_gg, inp.coeffs_qq
    wg, wq = inp.weights.w_gg, inp.weights.w_qqbar
    if wg == 1.0 or wg == 0.0:
        c = cg if wg == 1.0 else cq
        kk = c.c_kk / c.a_tilde
        diag = ((1.0 + kk) / 4.0, (1.0 - kk) / 4.0, (1.0 - kk) / 4.0, (1.0 + kk) / 4.0)
        return _entropy_bits(diag) - _entropy_bits(_channel_eigenvalues(c))
    ag, aq = cg.a_tilde, cq.a_tilde
    scale = 4.0 * ag * aq
    d_kk = wg * cg.c_kk / ag + wq * cq.c_kk / aq
    diag_terms = [
        (2.0 * (wg * aq * cg.c_kk + wq * ag * cq.c_kk - ag * aq), 1.0 - d_kk),
        (-2.0 * (wg * aq * (ag + cg.c_kk) + wq * ag * (aq + cq.c_kk)), 1.0 + d_kk),
    ]
    acc = scale * math.log(4.0)
    acc += _log_sum(diag_terms)
    acc += _log_sum(_mixed_log_terms(inp))
    return acc / (scale * _LN2)


@dataclass(frozen=True)
class ClosedFormCheck:
    """Closed-form values paired with their match status vs the spectral route."""

    qmi_closed: float
    rec_closed: float
    status: str  # "ok" | "discrepancy" | "domain_error"


def closed_form_check(
    inp: ChannelPairInput,
    qmi_spectral: float,
    rec_spectral: float,
    tol: float = 1e-8,
) -> ClosedFormCheck:
    """Evaluate both closed forms and classify against the spectral values.

    A DomainError from either expression yields status "domain_error" with
    the failing value reported as NaN; otherwise the point is "ok" when both
    values agree with the spectral route within ``tol`` and "discrepancy"
    when at least one does not.
    """
    failed = False
    try:
        qmi_val = qmi_closed(inp)
    except DomainError:
        qmi_val = math.nan
        failed = True
    try:
        rec_val = rec_closed(inp)
    except DomainError:
        rec_val = math.nan
        failed = True
    if failed:
        status = "domain_error"
    elif abs(qmi_val - qmi_spectral) <= tol and abs(rec_val - rec_spectral) <= tol:
        status = "ok"
    else:
        status = "discrepancy"
    return ClosedFormCheck(qmi_closed=qmi_val, rec_closed=rec_val, status=status)
