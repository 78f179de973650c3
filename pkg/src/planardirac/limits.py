"""Weak-coupling expansions and nonrelativistic limits of the coefficients.

The quasi-relativistic forms keep terms through (alpha Z)^2; the residual
against the exact coefficients is O((alpha Z)^4), which the tests verify by
halving alpha Z and watching the residual shrink sixteenfold.  The pure
nonrelativistic limits are also provided in the (m_l, m_s, l) variables used
by nonrelativistic treatments of the same system.
"""

from __future__ import annotations

from .qnum import PhysicsConfig, QuantumState, ml_ms

__all__ = [
    "nonrel_eps0",
    "nonrel_eps1",
    "nonrel_eps1_mlms",
    "nonrel_eps2",
    "nonrel_eps2_l_form",
    "quasirel_eps0",
    "quasirel_eps1",
    "quasirel_eps2",
    "richardson_alpha_limit",
]


def _half_n(state: QuantumState) -> float:
    return state.n - 0.5


def nonrel_eps0(state: QuantumState) -> float:
    """Limit of eps0 as alpha Z -> 0: -1 / (2 (n - 1/2)^2)."""
    h = _half_n(state)
    return -0.5 / (h * h)


def nonrel_eps1(state: QuantumState) -> float:
    """Limit of eps1: m (2 kappa - 1)/(4 kappa) for kappa != 1/2, else 0."""
    kappa = state.kappa
    if state.two_kappa == 1:
        return 0.0
    return state.m_kappa * (2.0 * kappa - 1.0) / (4.0 * kappa)


def nonrel_eps1_mlms(state: QuantumState) -> float:
    """The same limit written as (m_l + 2 m_s)/2."""
    m_l, m_s = ml_ms(state.kappa, state.m_kappa)
    return 0.5 * (m_l + 2.0 * m_s)


def nonrel_eps2(state: QuantumState) -> float:
    """Limit of eps2: (n-1/2)^2 (20n^2 - 20n - 12 kappa^2 - 12 kappa + 9)/64."""
    h = _half_n(state)
    kappa = state.kappa
    return h * h * (20.0 * state.n ** 2 - 20.0 * state.n
                    - 12.0 * kappa * kappa - 12.0 * kappa + 9.0) / 64.0


def nonrel_eps2_l_form(n: int, l: int) -> float:
    """Equivalent form in the orbital quantum number:
    (n-1/2)^2 (5n^2 - 5n - 3l^2 + 3)/16."""
    h = n - 0.5
    return h * h * (5.0 * n * n - 5.0 * n - 3.0 * l * l + 3.0) / 16.0


def quasirel_eps0(state: QuantumState, config: PhysicsConfig) -> float:
    """eps0 through O((alpha Z)^2)."""
    h = _half_n(state)
    az2 = config.coupling ** 2
    corr = (h / abs(state.kappa) - 0.75) / (h * h)
    return -0.5 / (h * h) * (1.0 + az2 * corr)


def quasirel_eps1(state: QuantumState, config: PhysicsConfig) -> float:
    """eps1 through O((alpha Z)^2); the kappa = 1/2 branch is purely quadratic."""
    h = _half_n(state)
    az2 = config.coupling ** 2
    m = state.m_kappa
    kappa = state.kappa
    if state.two_kappa == 1:
        return -az2 * m / (4.0 * h * h)
    lead = m * (2.0 * kappa - 1.0) / (4.0 * kappa)
    return lead * (1.0 - az2 * kappa / ((2.0 * kappa - 1.0) * h * h))


def _beta_coefficient(n: int, kappa: float) -> float:
    """The (alpha Z)^2 numerator of the eps2 expansion."""
    ak = abs(kappa)
    k2 = kappa * kappa
    return (-80.0 * n ** 3 + 120.0 * n ** 2 + 44.0 * n ** 2 * ak - 68.0 * n
            + 24.0 * n * k2 + 24.0 * n * kappa - 44.0 * n * ak
            - 28.0 * k2 * ak + 8.0 * kappa * ak
            - 12.0 * k2 - 12.0 * kappa + 15.0 * ak + 14.0)


def quasirel_eps2(state: QuantumState, config: PhysicsConfig) -> float:
    """eps2 through O((alpha Z)^2)."""
    h = _half_n(state)
    n = state.n
    kappa = state.kappa
    az2 = config.coupling ** 2
    poly = 20.0 * n * n - 20.0 * n - 12.0 * kappa * kappa - 12.0 * kappa + 9.0
    lead = h * h * poly / 64.0
    beta = _beta_coefficient(n, kappa)
    return lead * (1.0 + az2 * beta / (2.0 * abs(kappa) * h * h * poly))


def richardson_alpha_limit(f, t: float) -> float:
    """Extrapolate f(alpha_scale) to alpha_scale -> 0.

    The coefficients are even functions of alpha Z, so f(t) = f0 + c t^2 + ...
    and (4 f(t/2) - f(t)) / 3 removes the quadratic term.
    """
    return (4.0 * f(t / 2.0) - f(t)) / 3.0
