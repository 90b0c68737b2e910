"""Leading-order spin density matrices for top-pair production.

Maps a kinematic point (invariant mass, production angle) and the
gluon/quark channel mixture to the normalized two-qubit spin state in the
helicity basis.  Coefficients are stored un-normalized (the overall
channel prefactor is kept) so the analytic cross-check formulas can
consume them directly; the quantum state is always the matrix divided by
four times the leading coefficient.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .spin_algebra import PAULI, hermitian_eigenvalues

__all__ = [
    "BelowThreshold",
    "NotPSD",
    "DEFAULT_TOP_MASS",
    "Kinematics",
    "ProductionCoefficients",
    "MixtureWeights",
    "beta_of_mass",
    "qqbar_coefficients",
    "gg_coefficients",
    "assemble_density",
    "pauli_expansion_density",
    "mixed_state",
]

DEFAULT_TOP_MASS = 173.0
PSD_TOL = -1e-10


class BelowThreshold(ValueError):
    """Invariant mass below twice the top mass: no pair can be produced."""


class NotPSD(ValueError):
    """Assembled matrix has a significantly negative eigenvalue."""


def beta_of_mass(m_ttbar: float, m_top: float = DEFAULT_TOP_MASS) -> float:
    """Top velocity in the pair rest frame for a given invariant mass."""
    if m_top <= 0:
        raise ValueError(f"m_top must be positive, got {m_top}")
    if m_ttbar < 2 * m_top:
        raise BelowThreshold(
            f"m_ttbar = {m_ttbar} GeV is below the production threshold {2 * m_top} GeV"
        )
    return math.sqrt(1.0 - 4.0 * m_top * m_top / (m_ttbar * m_ttbar))


@dataclass(frozen=True)
class Kinematics:
    """One phase-space point: invariant mass and production angle.

    The velocity ``beta`` is derived on construction; ``theta`` must lie in
    [0, pi].
    """

    m_ttbar: float
    theta: float
    m_top: float = DEFAULT_TOP_MASS
    beta: float = None  # derived

    def __post_init__(self):
        if not 0.0 <= self.theta <= math.pi:
            raise ValueError(f"theta = {self.theta} outside [0, pi]")
        object.__setattr__(self, "beta", beta_of_mass(self.m_ttbar, self.m_top))


@dataclass(frozen=True)
class MixtureWeights:
    """Channel weights; the quark weight is fixed by normalization."""

    w_gg: float

    def __post_init__(self):
        if not 0.0 <= self.w_gg <= 1.0:
            raise ValueError(f"w_gg = {self.w_gg} outside [0, 1]")

    @property
    def w_qqbar(self) -> float:
        return 1.0 - self.w_gg


@dataclass(frozen=True)
class ProductionCoefficients:
    """Un-normalized spin-correlation coefficients of one channel.

    ``a_tilde`` is the differential-cross-section coefficient; the c_ij are
    the correlation entries (c_kr = c_rk at this order).  The polarization
    vectors are identically zero for unpolarized leading-order production
    and are kept only so downstream code can assert that.
    """

    channel: str
    a_tilde: float
    c_rr: float
    c_nn: float
    c_kk: float
    c_rk: float
    f_prefactor: float
    b_plus: tuple = (0.0, 0.0, 0.0)
    b_minus: tuple = (0.0, 0.0, 0.0)

    def __post_init__(self):
        if self.channel not in ("qqbar", "gg"):
            raise ValueError(f"unknown channel {self.channel!r}")
        if self.a_tilde <= 0:
            raise ValueError(f"a_tilde must be positive, got {self.a_tilde}")
        bound = self.a_tilde * (1.0 + 1e-12)
        for name in ("c_rr", "c_nn", "c_kk", "c_rk"):
            val = getattr(self, name)
            if abs(val) > bound:
                raise ValueError(f"|{name}| = {abs(val)} exceeds a_tilde = {self.a_tilde}")
        if any(self.b_plus) or any(self.b_minus):
            raise ValueError("polarizations must be zero at leading order")


def qqbar_coefficients(kin: Kinematics) -> ProductionCoefficients:
    """Correlation coefficients of the quark-antiquark annihilation channel."""
    beta = kin.beta
    sin_t = math.sin(kin.theta)
    sin2 = sin_t * sin_t
    f_q = 1.0 / 18.0
    return ProductionCoefficients(
        channel="qqbar",
        a_tilde=f_q * (2.0 - beta * beta * sin2),
        c_rr=f_q * (2.0 - beta * beta) * sin2,
        c_nn=-f_q * beta * beta * sin2,
        c_kk=f_q * (2.0 - (2.0 - beta * beta) * sin2),
        c_rk=f_q * math.sqrt(1.0 - beta * beta) * math.sin(2.0 * kin.theta),
        f_prefactor=f_q,
    )


def gg_coefficients(kin: Kinematics) -> ProductionCoefficients:
    """Correlation coefficients of the gluon-fusion channel."""
    beta = kin.beta
    b2 = beta * beta
    b4 = b2 * b2
    sin_t = math.sin(kin.theta)
    cos_t = math.cos(kin.theta)
    sin2 = sin_t * sin_t
    sin4 = sin2 * sin2
    sin_2t = math.sin(2.0 * kin.theta)
    denom = 1.0 - b2 * cos_t * cos_t
    f_g = (7.0 + 9.0 * b2 * cos_t * cos_t) / (192.0 * denom * denom)
    return ProductionCoefficients(
        channel="gg",
        a_tilde=f_g * (1.0 + 2.0 * b2 * sin2 - b4 * (1.0 + sin4)),
        c_rr=-f_g * (1.0 - b2 * (2.0 - b2) * (1.0 + sin4)),
        c_nn=-f_g * (1.0 - 2.0 * b2 + b4 * (1.0 + sin4)),
        c_kk=-f_g * (1.0 - b2 * sin_2t * sin_2t / 2.0 - b4 * (1.0 + sin4)),
        c_rk=f_g * math.sqrt(1.0 - b2) * b2 * sin_2t * sin2,
        f_prefactor=f_g,
    )


def _density_from_ratios(kk, rr, nn, rk):
    """Literal matrix layout in the helicity basis from normalized ratios."""
    d_plus = (1.0 + kk) / 4.0
    d_minus = (1.0 - kk) / 4.0
    x = (rr - nn) / 4.0
    y = (rr + nn) / 4.0
    z = rk / 4.0
    return np.array(
        [
            [d_plus, z, z, x],
            [z, d_minus, y, -z],
            [z, y, d_minus, -z],
            [x, -z, -z, d_plus],
        ],
        dtype=complex,
    )


def assemble_density(coeffs: ProductionCoefficients) -> np.ndarray:
    """Normalized spin density matrix of one channel.

    Builds the literal helicity-basis matrix divided by 4 a_tilde and
    verifies positivity; the equivalent Pauli-string construction is
    available as :func:`pauli_expansion_density` for cross-checking.
    """
    a = coeffs.a_tilde
    rho = _density_from_ratios(
        coeffs.c_kk / a, coeffs.c_rr / a, coeffs.c_nn / a, coeffs.c_rk / a
    )
    evals = hermitian_eigenvalues(rho)
    if evals[-1] < PSD_TOL:
        raise NotPSD(f"eigenvalue {evals[-1]:.3e} below {PSD_TOL:.0e}")
    return rho


def pauli_expansion_density(coeffs: ProductionCoefficients) -> np.ndarray:
    """Same state built from the Pauli-string expansion (independent route)."""
    a = coeffs.a_tilde
    kk = coeffs.c_kk / a
    rr = coeffs.c_rr / a
    nn = coeffs.c_nn / a
    rk = coeffs.c_rk / a
    sk, sr, sn = PAULI.sigma_k, PAULI.sigma_r, PAULI.sigma_n
    rho = (
        np.eye(4, dtype=complex)
        + kk * np.kron(sk, sk)
        + rr * np.kron(sr, sr)
        + nn * np.kron(sn, sn)
        + rk * (np.kron(sr, sk) + np.kron(sk, sr))
    ) / 4.0
    return rho


def mixed_state(kin: Kinematics, weights: MixtureWeights) -> np.ndarray:
    """Convex mixture of the two channels at one kinematic point.

    Each channel is normalized by its own 4 a_tilde before mixing, so the
    weights are genuine state probabilities.
    """
    w = weights.w_gg
    if w == 1.0:
        return assemble_density(gg_coefficients(kin))
    if w == 0.0:
        return assemble_density(qqbar_coefficients(kin))
    return w * assemble_density(gg_coefficients(kin)) + (1.0 - w) * assemble_density(
        qqbar_coefficients(kin)
    )
