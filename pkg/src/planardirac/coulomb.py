"""Zeroth-order (field-free) bound states of the planar Dirac-Coulomb problem.

All radial quantities are expressed in Hartree atomic units; the radial
variable of the Laguerre series is x = 2 Z r / N (the inverse length scale is
k = Z/N).  Energies are reported both as E/mc^2 and as the dimensionless
coefficient eps0 that multiplies Z^2 Hartree in E = mc^2 + eps0 Z^2 Hartree.

The coefficient eps0 is evaluated in the rationalized form
-1/(N (n_r + gamma + N)), which is algebraically identical to
(alpha Z)^-2 ((n_r+gamma)/N - 1) but free of the catastrophic cancellation
that form suffers as alpha Z -> 0.  The same device gives 1 -/+ eps exactly
through eps_aux = alpha Z / (n_r + gamma + N).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NoBoundStateError
from .qnum import PhysicsConfig, QuantumState, big_n, gamma_kappa
from .specfun import RadialFunction, integrate_radial_product

__all__ = [
    "EnergyBreakdown",
    "RadialOrbital",
    "energy0",
    "eps0_coefficient",
    "epsilon_small",
    "radial_orbital",
]


def _channel_numbers(state: QuantumState, config: PhysicsConfig):
    g = gamma_kappa(state.kappa, config)
    n_cap = big_n(state.n_r, state.kappa, config)
    return state.n_r, state.kappa, g, n_cap


def energy0(state: QuantumState, config: PhysicsConfig) -> float:
    """Bound-state energy in units of mc^2: (n_r + gamma_kappa) / N."""
    n_r, _, g, n_cap = _channel_numbers(state, config)
    return (n_r + g) / n_cap


def epsilon_small(state: QuantumState, config: PhysicsConfig) -> float:
    """E0/mc^2 evaluated through the auxiliary ratio eps_aux.

    eps_aux = sqrt((mc^2 - E0)/(mc^2 + E0)) = alpha Z/(n_r + gamma + N), so
    E0/mc^2 = (1 - eps_aux^2)/(1 + eps_aux^2).  Numerically independent of
    :func:`energy0`; the two agree to 1e-13 and tests enforce it.
    """
    n_r, _, g, n_cap = _channel_numbers(state, config)
    eps_aux = config.coupling / (n_r + g + n_cap)
    return (1.0 - eps_aux * eps_aux) / (1.0 + eps_aux * eps_aux)


def eps0_coefficient(state: QuantumState, config: PhysicsConfig) -> float:
    """Dimensionless binding coefficient: E0 = mc^2 + eps0 * Z^2 * Hartree.

    Uses the cancellation-free form -1/(N (n_r + gamma + N)).
    """
    n_r, _, g, n_cap = _channel_numbers(state, config)
    return -1.0 / (n_cap * (n_r + g + n_cap))


@dataclass(frozen=True)
class RadialOrbital:
    """Two-component radial wavefunction (P, Q) of a bound state.

    P and Q share the scale k = Z/N and the envelope power gamma_kappa;
    they are normalized so that int (P^2 + Q^2) dr = 1.
    """
    state: QuantumState
    gamma: float
    big_n: float
    eps_small: float
    scale_k: float
    P: RadialFunction
    Q: RadialFunction

    def norm_integral(self, order: int | None = None) -> float:
        """int (P^2 + Q^2) dr by quadrature; equals 1 up to roundoff."""
        return (integrate_radial_product([self.P, self.P], order=order)
                + integrate_radial_product([self.Q, self.Q], order=order))


def radial_orbital(state: QuantumState, config: PhysicsConfig) -> RadialOrbital:
    """Construct the normalized bound-state radial spinor for ``state``.

    The large component is

        P = sqrt(Z (1+eps) n_r! (n_r+2g) / (2 N^2 (N-kappa) Gamma(n_r+2g)))
            * x^g e^{-x/2} [L_{n_r-1}^{(2g)}(x) - (N-kappa)/(n_r+2g) L_{n_r}^{(2g)}(x)]

    with x = 2 Z r / N, and Q has the same shape with 1-eps under the root,
    an overall minus sign, and a plus sign inside the bracket.  Square-root
    prefactors are assembled in log space; 1 +/- eps are computed from
    eps_aux so they stay accurate in the weak-coupling regime.
    """
    n_r, kappa, g, n_cap = _channel_numbers(state, config)
    if state.two_kappa > 0 and n_r == 0:  # unreachable via QuantumState, kept as a guard
        raise NoBoundStateError("no planar Dirac-Coulomb bound state for n_r=0, kappa>0")
    # channel scalars in extended precision: the kappa > 0 first moment
    # cancels to O((alpha Z)^2), so double-precision gamma/N/mix would cap
    # the quadrature route at ~1e-10 relative there
    az = np.longdouble(config.alpha) * np.longdouble(config.alpha_scale)         * np.longdouble(config.Z)
    kap = np.longdouble(state.two_kappa) / 2
    g_ld = np.sqrt(kap * kap - az * az)
    n_cap_ld = np.sqrt(np.longdouble(n_r) ** 2 + 2 * n_r * g_ld + kap * kap)
    eps_aux = az / (n_r + g_ld + n_cap_ld)
    denom_aux = 1.0 + eps_aux * eps_aux
    one_plus_eps = 2.0 / denom_aux
    one_minus_eps = 2.0 * eps_aux * eps_aux / denom_aux
    eps = float((1.0 - eps_aux * eps_aux) / denom_aux)

    k = config.Z / n_cap
    two_g = 2.0 * g
    common = (math.log(config.Z) + math.lgamma(n_r + 1.0) + math.log(n_r + two_g)
              - math.log(2.0) - 2.0 * math.log(n_cap) - math.log(n_cap - kappa)
              - math.lgamma(n_r + two_g))
    mix = (n_cap_ld - kap) / (n_r + 2 * g_ld)
    g = g_ld            # envelope exponent and Laguerre index kept in
    two_g = 2 * g_ld    # extended precision; the f64 copies above feed logs

    coeffs_p = np.zeros(n_r + 1, dtype=np.longdouble)
    coeffs_q = np.zeros(n_r + 1, dtype=np.longdouble)
    if n_r >= 1:
        coeffs_p[n_r - 1] = 1.0
        coeffs_q[n_r - 1] = -1.0
    coeffs_p[n_r] = -mix
    coeffs_q[n_r] = -mix

    p = RadialFunction(scale_k=k, power=g, alpha_index=two_g,
                       log_norm=0.5 * (common + math.log(float(one_plus_eps))),
                       coeffs=coeffs_p)
    q = RadialFunction(scale_k=k, power=g, alpha_index=two_g,
                       log_norm=0.5 * (common + math.log(float(one_minus_eps))),
                       coeffs=coeffs_q)
    return RadialOrbital(state=state, gamma=g, big_n=n_cap, eps_small=eps,
                         scale_k=k, P=p, Q=q)


@dataclass(frozen=True)
class EnergyBreakdown:
    """Dimensionless Zeeman coefficients of one state plus assembly helpers.

    E(B) = mc^2 + eps0 Z^2 H + eps1 (B/B0) H + eps2 Z^-2 (B/B0)^2 H with
    H = Hartree; in atomic units H = 1 and mc^2 = alpha_eff^-2.
    """
    state: QuantumState
    eps0: float
    eps1: float
    eps2: float
    units: str = "hartree-coefficients"

    def energy_au(self, b_over_b0: float, config: PhysicsConfig,
                  include_rest_mass: bool = True) -> float:
        """Assembled E(B) in Hartree atomic units through second order."""
        z = config.Z
        e = self.eps0 * z * z + self.eps1 * b_over_b0 + self.eps2 * b_over_b0 ** 2 / (z * z)
        if include_rest_mass:
            e += config.mc2
        return e

    def energy_over_mc2(self, b_over_b0: float, config: PhysicsConfig) -> float:
        return self.energy_au(b_over_b0, config) / config.mc2

    @property
    def chi(self) -> float:
        """Magnetizability in units of alpha^2 a0^3 / Z^2 (negative = diamagnetic)."""
        return -2.0 * self.eps2
