"""First- and second-order Zeeman corrections and magnetizabilities.

Everything here exists twice on purpose: once as the closed algebraic form
and once as an independently assembled numerical route (quadrature over the
radial functions, Sturmian sum with 1/(mu-1) weights).  The tests hold the
two routes together at the 1e-9..1e-12 level.

Conventions: coefficients are the dimensionless eps1, eps2 multiplying
(B/B0) Hartree and Z^-2 (B/B0)^2 Hartree respectively.  The radial first
moment int r P Q dr is reported in atomic units, where its closed form is
(alpha/4) [1 - 2 kappa (n_r+gamma)/N].  The kappa > 0 branch of that bracket
is evaluated in a rationalized form because the direct difference cancels to
O((alpha Z)^2) for kappa = 1/2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .coulomb import EnergyBreakdown, eps0_coefficient, radial_orbital
from .errors import DomainError, OverlapMismatchError
from .qnum import PhysicsConfig, QuantumState, big_n, gamma_kappa
from .specfun import integrate_radial_product
from .sturmian import big_n_signed, mu_minus_one_at_bound, sturmian_pair_at_bound

__all__ = [
    "OverlapTable",
    "build_overlap_table",
    "e1_bracket",
    "e1_coefficient",
    "e1_via_quadrature",
    "e2_assembled",
    "e2_coefficient",
    "magnetizability",
    "magnetizability_ground",
    "magnetizability_nr0",
    "overlap_integrals",
    "overlap_integrals_closed",
    "overlap_integrals_quadrature",
    "radial_first_moment",
    "zeeman_breakdown",
]

#: relative agreement demanded between quadrature and closed-form overlaps
OVERLAP_RTOL = 1e-9


def e1_bracket(state: QuantumState, config: PhysicsConfig) -> float:
    """The factor [1 - 2 kappa (n_r + gamma)/N], cancellation-safe.

    For kappa > 0 the two terms nearly cancel (exactly at alpha Z = 0 for
    kappa = 1/2), so the difference is rationalized to
    [N^2 (1 - 4 kappa^2) + 4 kappa^2 (alpha Z)^2] / [N (N + 2 kappa (n_r+gamma))].
    """
    n_r = state.n_r
    kappa = state.kappa
    g = gamma_kappa(kappa, config)
    n_cap = big_n(n_r, kappa, config)
    if kappa < 0:
        return 1.0 - 2.0 * kappa * (n_r + g) / n_cap
    az = config.coupling
    num = n_cap * n_cap * (1.0 - 4.0 * kappa * kappa) + 4.0 * kappa * kappa * az * az
    return num / (n_cap * (n_cap + 2.0 * kappa * (n_r + g)))


def e1_coefficient(state: QuantumState, config: PhysicsConfig) -> float:
    """eps1 = -(m_kappa / 4 kappa) [1 - 2 kappa (n_r+gamma)/N]."""
    return -(state.m_kappa / (4.0 * state.kappa)) * e1_bracket(state, config)


def radial_first_moment(state: QuantumState, config: PhysicsConfig,
                        order: int | None = None) -> float:
    """int_0^inf r P(r) Q(r) dr by quadrature (atomic units)."""
    orb = radial_orbital(state, config)
    return integrate_radial_product([orb.P, orb.Q], r_power=1, order=order)


def e1_via_quadrature(state: QuantumState, config: PhysicsConfig) -> float:
    """eps1 assembled from the quadrature value of int r P Q dr.

    E1 = -(m/kappa) e c B int r P Q dr, so the coefficient of (B/B0) Hartree
    is -(m/kappa) (1/alpha) int r P Q dr.
    """
    moment = radial_first_moment(state, config)
    return -(state.m_kappa / state.kappa) * moment / config.alpha_eff


def _log_sqrt_ratio(n_r: int, kappa: float, g: float, n_cap: float,
                    n_abs: int, np_cap: float) -> float:
    """log of the square-root factor shared by both overlap closed forms."""
    two_g = 2.0 * g
    log_r = (math.lgamma(n_r + 1.0) + math.log(n_r + two_g)
             + math.lgamma(n_abs + 1.0) + math.log(n_abs + two_g)
             - math.log(n_cap * (n_cap - kappa)) - math.lgamma(n_r + two_g)
             - math.log(np_cap * (np_cap - kappa)) - math.lgamma(n_abs + two_g))
    return 0.5 * log_r


def overlap_integrals_closed(state: QuantumState, n_prime: int,
                             config: PhysicsConfig) -> tuple[float, float]:
    """Closed Kronecker-delta forms of the two Sturmian overlap integrals.

    integral_A = int r (Q S_n' + P T_n') dr fires only for |n'| = n_r +/- 1
    or n' = -n_r; integral_B = int r (mu Q S_n' + P T_n') dr adds
    |n'| = n_r +/- 2.  Both vanish identically outside those windows.
    """
    if n_prime == state.n_r:
        raise DomainError("n' = n_r is excluded from the overlap sum")
    n_r = state.n_r
    kappa = state.kappa
    g = gamma_kappa(kappa, config)
    n_cap = big_n(n_r, kappa, config)
    np_cap = big_n_signed(n_prime, kappa, config)
    n_abs = abs(n_prime)
    two_g = 2.0 * g
    sqrt_factor = math.exp(_log_sqrt_ratio(n_r, kappa, g, n_cap, n_abs, np_cap))
    az_over = config.alpha_eff / config.Z

    term_a = 0.0
    if n_abs == n_r + 1:
        term_a += ((n_cap - kappa) * (np_cap - n_cap - 2.0 * kappa)
                   * math.exp(math.lgamma(n_r + two_g) - math.lgamma(n_r + 1.0)))
    if n_prime == -n_r and n_r >= 1:
        term_a += 4.0 * (n_r + g) * math.exp(math.lgamma(n_r + two_g) - math.lgamma(n_r))
    if n_abs == n_r - 1:
        term_a += ((np_cap - kappa) * (n_cap - np_cap - 2.0 * kappa)
                   * math.exp(math.lgamma(n_r + two_g - 1.0) - math.lgamma(n_r)))
    integral_a = -(az_over / 4.0) * n_cap * sqrt_factor * term_a

    term_b = 0.0
    if n_abs == n_r + 2:
        term_b -= ((n_cap - kappa) / (n_r + two_g)
                   * math.exp(math.lgamma(n_r + two_g + 2.0) - math.lgamma(n_r + 1.0)))
    if n_abs == n_r + 1:
        term_b += (2.0 * (n_cap - kappa)
                   * (2.0 * n_r + two_g + 1.0 - kappa * (n_cap + np_cap))
                   * math.exp(math.lgamma(n_r + two_g) - math.lgamma(n_r + 1.0)))
    if n_prime == -n_r and n_r >= 1:
        term_b -= (2.0 * (n_cap * n_cap + 2.0 * (n_r + g) ** 2) / n_cap
                   * math.exp(math.lgamma(n_r + two_g) - math.lgamma(n_r)))
    if n_abs == n_r - 1:
        term_b -= (2.0 * (np_cap - kappa)
                   * (2.0 * n_r + two_g - 1.0 - kappa * (n_cap + np_cap))
                   * math.exp(math.lgamma(n_r + two_g - 1.0) - math.lgamma(n_r)))
    if n_abs == n_r - 2:
        term_b += ((np_cap - kappa) / (n_r + two_g - 2.0)
                   * math.exp(math.lgamma(n_r + two_g) - math.lgamma(n_r - 1.0)))
    mu_m1 = mu_minus_one_at_bound(n_prime, state, config)
    integral_b = -(az_over / 8.0) * n_cap * mu_m1 * sqrt_factor * term_b
    return integral_a, integral_b


def overlap_integrals_quadrature(state: QuantumState, n_prime: int,
                                 config: PhysicsConfig) -> tuple[float, float]:
    """The same two integrals evaluated directly by Gauss quadrature."""
    if n_prime == state.n_r:
        raise DomainError("n' = n_r is excluded from the overlap sum")
    orb = radial_orbital(state, config)
    pair = sturmian_pair_at_bound(n_prime, state, config)
    qs = integrate_radial_product([orb.Q, pair.S], r_power=1)
    pt = integrate_radial_product([orb.P, pair.T], r_power=1)
    mu = 1.0 + mu_minus_one_at_bound(n_prime, state, config)
    return qs + pt, mu * qs + pt


def _overlap_scale(state: QuantumState, config: PhysicsConfig) -> float:
    """Magnitude yardstick for deciding when an overlap counts as zero."""
    return config.alpha_eff / config.Z


def overlap_integrals(state: QuantumState, n_prime: int,
                      config: PhysicsConfig) -> tuple[float, float]:
    """Overlap integrals with the two routes checked against each other.

    Returns the quadrature values after verifying they match the closed
    Kronecker-delta forms to OVERLAP_RTOL (relative for live entries, scaled
    absolute for entries the selection rules say vanish).  A mismatch raises
    :class:`OverlapMismatchError` with the offending values; it is never
    silently patched.
    """
    quad = overlap_integrals_quadrature(state, n_prime, config)
    closed = overlap_integrals_closed(state, n_prime, config)
    scale = _overlap_scale(state, config)
    for name, q, c in (("A", quad[0], closed[0]), ("B", quad[1], closed[1])):
        tol = OVERLAP_RTOL * max(abs(c), scale)
        if abs(q - c) > tol:
            raise OverlapMismatchError(
                f"overlap integral {name} mismatch for {state.label}, n'={n_prime}: "
                f"quadrature {q!r} vs closed form {c!r}")
    return quad


@dataclass(frozen=True)
class OverlapTable:
    """Per-n' overlap integrals of one state, for inspection and tests."""
    state: QuantumState
    entries: dict[int, tuple[float, float]]

    def window(self) -> list[int]:
        return sorted(self.entries)


def build_overlap_table(state: QuantumState, config: PhysicsConfig,
                        max_offset: int = 4) -> OverlapTable:
    """Overlap integrals for all n' with |n'| <= n_r + max_offset, n' != n_r."""
    n_r = state.n_r
    entries = {}
    for n_prime in range(-(n_r + max_offset), n_r + max_offset + 1):
        if n_prime == n_r:
            continue
        entries[n_prime] = overlap_integrals(state, n_prime, config)
    return OverlapTable(state=state, entries=entries)


def e2_coefficient(state: QuantumState, config: PhysicsConfig) -> float:
    """Closed polynomial form of eps2 (independent of m_kappa).

    eps2 = (1/16) [ -kappa (3 n_r^2 + 6 n_r g + 4 g^2 - kappa^2)
                    + eps0_small * (5 n_r^4 + 20 n_r^3 g + n_r^2 + 22 n_r^2 g^2
                       + 5 n_r^2 k^2 + 4 n_r g^3 + 2 n_r g + 10 n_r g k^2
                       + 4 g^2 k^2 - 2 k^4 + k^2) ].
    """
    n_r = state.n_r
    kappa = state.kappa
    g = gamma_kappa(kappa, config)
    n_cap = big_n(n_r, kappa, config)
    k2 = kappa * kappa
    eps_small = (n_r + g) / n_cap
    poly = (5.0 * n_r ** 4 + 20.0 * n_r ** 3 * g + n_r ** 2
            + 22.0 * n_r ** 2 * g * g + 5.0 * n_r ** 2 * k2
            + 4.0 * n_r * g ** 3 + 2.0 * n_r * g + 10.0 * n_r * g * k2
            + 4.0 * g * g * k2 - 2.0 * k2 * k2 + k2)
    lead = -kappa * (3.0 * n_r ** 2 + 6.0 * n_r * g + 4.0 * g * g - k2)
    return (lead + eps_small * poly) / 16.0


def e2_assembled(state: QuantumState, config: PhysicsConfig,
                 max_offset: int = 4) -> float:
    """eps2 assembled from the Sturmian sum plus the diagonal reduced-Green term.

    The sum runs over n' != n_r with quadrature overlap integrals weighted by
    1/(mu - 1); the diagonal term is N^2 (E0/mc^2) (int r P Q dr)^2 / alpha^2.
    Selection rules make the sum exactly finite, so max_offset only widens the
    zero tail.
    """
    n_r = state.n_r
    orb = radial_orbital(state, config)
    total = 0.0
    for n_prime in range(-(n_r + max_offset), n_r + max_offset + 1):
        if n_prime == n_r:
            continue
        a_int, b_int = overlap_integrals_quadrature(state, n_prime, config)
        mu_m1 = mu_minus_one_at_bound(n_prime, state, config)
        total += a_int * b_int / mu_m1
    z = config.Z
    alpha = config.alpha_eff
    eps_sum = -(z * z / (4.0 * alpha * alpha)) * total
    moment = integrate_radial_product([orb.P, orb.Q], r_power=1)
    eps_diag = (orb.big_n ** 2) * orb.eps_small * (moment / alpha) ** 2
    return eps_sum + eps_diag


def magnetizability(state: QuantumState, config: PhysicsConfig) -> float:
    """chi in units alpha^2 a0^3 / Z^2; negative values are diamagnetic."""
    return -2.0 * e2_coefficient(state, config)


def magnetizability_nr0(state: QuantumState, config: PhysicsConfig) -> float:
    """Special closed form of chi for n_r = 0 states (kappa = -(n - 1/2))."""
    if state.n_r != 0:
        raise DomainError(f"state {state.label} has n_r != 0")
    g = gamma_kappa(state.kappa, config)
    half = state.n - 0.5
    return -(half / 8.0) * (2.0 * g + 1.0) * (2.0 * g * g + g - half * half)


def magnetizability_ground(config: PhysicsConfig) -> float:
    """Ground-state chi: -(1/64)(2g+1)(8g^2+4g-1) in units alpha^2 a0^3/Z^2."""
    g = gamma_kappa(-0.5, config)
    return -(2.0 * g + 1.0) * (8.0 * g * g + 4.0 * g - 1.0) / 64.0


def zeeman_breakdown(state: QuantumState, config: PhysicsConfig) -> EnergyBreakdown:
    """All three dimensionless coefficients of one state, closed forms."""
    return EnergyBreakdown(
        state=state,
        eps0=eps0_coefficient(state, config),
        eps1=e1_coefficient(state, config),
        eps2=e2_coefficient(state, config),
    )
