"""Radial Dirac-Coulomb Sturmian basis at fixed energy.

The basis is indexed by a signed integer n' running over all of Z.  The
signed apparent quantum number N' is positive for n' > 0, negative for
n' < 0, and equals -kappa for n' = 0.  The potential-strength eigenvalue is

    mu_{n' kappa}(E) = (eps / (alpha Z)) (|n'| + gamma_kappa + N'),

with eps = sqrt((mc^2 - E)/(mc^2 + E)).  At the bound energy E0 of the state
with radial number n_r, mu = 1 exactly for n' = n_r, and the pair (S, T)
reduces to (N/Z) (P, Q).

Energies are passed as the dimensionless ratio e = E/mc^2 in (-1, 1).  At a
bound energy, prefer :func:`sturmian_pair_at_bound` /
:func:`mu_minus_one_at_bound`: they parameterize through
eps_aux = alpha Z/(n_r + gamma + N), which avoids forming 1 - e and keeps
weak-coupling accuracy, and they evaluate mu - 1 in a rationalized form with
no cancellation near mu = 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .coulomb import radial_orbital
from .errors import DomainError, NumericError
from .qnum import PhysicsConfig, QuantumState, big_n, gamma_kappa
from .specfun import RadialFunction

__all__ = [
    "SturmianFunction",
    "big_n_signed",
    "ijk_functions",
    "mu_eigenvalue",
    "mu_minus_one_at_bound",
    "sturmian_energy_derivative",
    "sturmian_pair",
    "sturmian_pair_at_bound",
]


def big_n_signed(n_prime: int, kappa: float, config: PhysicsConfig) -> float:
    """Signed N' = +/- sqrt(n'^2 + 2|n'| gamma + kappa^2); N'_0 = -kappa."""
    g = gamma_kappa(kappa, config)
    mag = math.sqrt(n_prime * n_prime + 2.0 * abs(n_prime) * g + kappa * kappa)
    if n_prime > 0:
        return mag
    if n_prime < 0:
        return -mag
    return -kappa


def _epsilon_of(e_over_mc2: float) -> float:
    if not -1.0 < e_over_mc2 < 1.0:
        raise DomainError(f"energy must satisfy |E| < mc^2, got E/mc^2 = {e_over_mc2}")
    return math.sqrt((1.0 - e_over_mc2) / (1.0 + e_over_mc2))


def mu_eigenvalue(n_prime: int, kappa: float, e_over_mc2: float,
                  config: PhysicsConfig) -> float:
    """Potential-strength eigenvalue mu at energy E = e_over_mc2 * mc^2."""
    eps = _epsilon_of(e_over_mc2)
    g = gamma_kappa(kappa, config)
    return (eps / config.coupling) * (abs(n_prime) + g + big_n_signed(n_prime, kappa, config))


def mu_minus_one_at_bound(n_prime: int, state: QuantumState,
                          config: PhysicsConfig) -> float:
    """mu_{n' kappa}(E0) - 1 for the bound energy of ``state``, rationalized.

    Uses (mu+1)/(mu-1) = (N' + N)/(|n'| - n_r) for |n'| != n_r and
    = -(n_r + gamma)/N for n' = -n_r, so the result is exact where the
    direct difference would cancel.  Zero (mu = 1) occurs only at n' = n_r.
    """
    n_r = state.n_r
    kappa = state.kappa
    if n_prime == n_r:
        return 0.0
    n_cap = big_n(n_r, kappa, config)
    if abs(n_prime) == n_r:  # the mirror index n' = -n_r
        g = gamma_kappa(kappa, config)
        return -2.0 * n_cap / (n_r + g + n_cap)
    np_cap = big_n_signed(n_prime, kappa, config)
    return 2.0 * (abs(n_prime) - n_r) / (np_cap + n_cap - abs(n_prime) + n_r)


@dataclass(frozen=True)
class SturmianFunction:
    """One Sturmian basis pair (S, T) at fixed energy.

    ``epsilon_aux`` is the paper-style energy ratio sqrt((mc^2-E)/(mc^2+E)),
    ``k_scale`` the inverse length in the exponent, ``n_prime_cap`` the signed
    N'.  S and T share the envelope x^gamma e^{-x/2} with x = 2 k r.
    """
    n_r_prime: int
    two_kappa: int
    e_over_mc2: float
    epsilon_aux: float
    k_scale: float
    n_prime_cap: float
    mu: float
    S: RadialFunction
    T: RadialFunction


def _build_pair(n_prime: int, kappa: float, epsilon: float, e_over_mc2: float,
                config: PhysicsConfig) -> SturmianFunction:
    g = gamma_kappa(kappa, config)
    np_cap = big_n_signed(n_prime, kappa, config)
    product = np_cap * (np_cap - kappa)
    if product <= 0.0:
        # the sign convention guarantees N'(N'-kappa) > 0; reaching this means
        # a bug upstream, not a physical configuration
        raise NumericError(f"degenerate Sturmian normalization: N'(N'-kappa) = {product}")
    m = abs(n_prime)
    two_g = 2.0 * g
    k = 2.0 * epsilon / (config.alpha_eff * (1.0 + epsilon * epsilon))
    common = (math.log(config.alpha_eff) + math.lgamma(m + 1.0) + math.log(m + two_g)
              - math.log(2.0) - math.log(product) - math.lgamma(m + two_g))
    # extended-precision channel scalars, for the same cancellation reasons
    # as in the bound orbital construction
    az = np.longdouble(config.alpha) * np.longdouble(config.alpha_scale)         * np.longdouble(config.Z)
    kap = np.longdouble(round(2 * kappa)) / 2
    g_ld = np.sqrt(kap * kap - az * az)
    cap_mag = np.sqrt(np.longdouble(m) ** 2 + 2 * m * g_ld + kap * kap)
    if n_prime > 0:
        np_cap_ld = cap_mag
    elif n_prime < 0:
        np_cap_ld = -cap_mag
    else:
        np_cap_ld = -kap
    mix = (np_cap_ld - kap) / (m + 2 * g_ld)
    g = g_ld            # extended-precision envelope exponent / index
    two_g = 2 * g_ld
    coeffs_s = np.zeros(m + 1, dtype=np.longdouble)
    coeffs_t = np.zeros(m + 1, dtype=np.longdouble)
    if m >= 1:
        coeffs_s[m - 1] = 1.0
        coeffs_t[m - 1] = -1.0
    coeffs_s[m] = -mix
    coeffs_t[m] = -mix
    s = RadialFunction(scale_k=k, power=g, alpha_index=two_g,
                       log_norm=0.5 * (common - math.log(epsilon)), coeffs=coeffs_s)
    t = RadialFunction(scale_k=k, power=g, alpha_index=two_g,
                       log_norm=0.5 * (common + math.log(epsilon)), coeffs=coeffs_t)
    mu = (epsilon / config.coupling) * (m + g + np_cap)
    return SturmianFunction(
        n_r_prime=n_prime, two_kappa=int(round(2 * kappa)), e_over_mc2=e_over_mc2,
        epsilon_aux=epsilon, k_scale=k, n_prime_cap=np_cap, mu=mu, S=s, T=t)


def sturmian_pair(n_prime: int, kappa: float, e_over_mc2: float,
                  config: PhysicsConfig) -> SturmianFunction:
    """Sturmian pair (S, T) at an arbitrary energy in (-mc^2, mc^2)."""
    epsilon = _epsilon_of(e_over_mc2)
    return _build_pair(n_prime, kappa, epsilon, e_over_mc2, config)


def sturmian_pair_at_bound(n_prime: int, state: QuantumState,
                           config: PhysicsConfig) -> SturmianFunction:
    """Sturmian pair evaluated exactly at the bound energy of ``state``."""
    g = gamma_kappa(state.kappa, config)
    n_cap = big_n(state.n_r, state.kappa, config)
    eps_aux = config.coupling / (state.n_r + g + n_cap)
    e = (1.0 - eps_aux * eps_aux) / (1.0 + eps_aux * eps_aux)
    return _build_pair(n_prime, state.kappa, eps_aux, e, config)


def sturmian_energy_derivative(n_prime: int, kappa: float, e_over_mc2: float,
                               config: PhysicsConfig) -> tuple[RadialFunction, RadialFunction]:
    """(dS/dE, dT/dE) at fixed r, E in Hartree atomic units.

    Built from the closed forms

        dS/dE = -E/((mc^2)^2 - E^2) [ r dS/dr - (mc^2 / 2E) S ]
        dT/dE = -E/((mc^2)^2 - E^2) [ r dT/dr + (mc^2 / 2E) T ]

    with r d/dr taken analytically on the Laguerre representation.  Note the
    opposite sign of the mc^2/2E term between the two branches.
    """
    if e_over_mc2 <= 0.0:
        raise DomainError("bound atomic energies are positive; got E <= 0")
    pair = sturmian_pair(n_prime, kappa, e_over_mc2, config)
    e = e_over_mc2
    mc2 = config.mc2
    front = -e / (mc2 * (1.0 - e * e))
    half_over_e = 1.0 / (2.0 * e)
    ds = pair.S.r_times_derivative().linear_combination(pair.S, front, -front * half_over_e)
    dt = pair.T.r_times_derivative().linear_combination(pair.T, front, +front * half_over_e)
    return ds, dt


def ijk_functions(state: QuantumState, config: PhysicsConfig
                  ) -> tuple[RadialFunction, RadialFunction, RadialFunction]:
    """The bound-channel limit functions (I, J, K) entering the reduced
    Green-function expansion:

        I = e0 r dS/dr - S/2,   J = I + S,   K = e0 r dT/dr + T/2,

    with everything evaluated at the bound energy (e0 = E0/mc^2) and
    n' = n_r.  J - I = S holds exactly by construction.
    """
    pair = sturmian_pair_at_bound(state.n_r, state, config)
    orbital = radial_orbital(state, config)
    e0 = orbital.eps_small
    i_fn = pair.S.r_times_derivative().linear_combination(pair.S, e0, -0.5)
    j_fn = pair.S.r_times_derivative().linear_combination(pair.S, e0, +0.5)
    k_fn = pair.T.r_times_derivative().linear_combination(pair.T, e0, +0.5)
    return i_fn, j_fn, k_fn
