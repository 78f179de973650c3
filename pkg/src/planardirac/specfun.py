"""Special functions and quadrature shared by every radial integral in the package.

Three layers live here:

* scalar special functions: ``log_gamma``, generalized Laguerre polynomials
  (with the convention that degree -1 means the zero polynomial), and the
  closed-form value of the weighted Laguerre product integral;
* Gauss quadrature for the weight ``x**a * exp(-x)`` on ``[0, inf)`` with
  real ``a > -1``, built by the Golub-Welsch algorithm;
* :class:`RadialFunction`, an immutable "Laguerre series under an envelope"
  representation ``exp(log_norm) * x**power * exp(-x/2) * sum_i c_i L_i(x)``
  with ``x = 2*k*r``.  Products of such functions (times an integer power of
  ``r``) are polynomials against the quadrature weight, so every integral in
  the package is evaluated exactly up to roundoff.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .errors import DomainError, NumericError

__all__ = [
    "QuadratureRule",
    "RadialFunction",
    "binomial_real",
    "gauss_generalized_laguerre",
    "integrate_radial_product",
    "laguerre",
    "laguerre_integral_identity",
    "laguerre_product_first_moment",
    "laguerre_series",
    "log_gamma",
]


def log_gamma(x: float) -> float:
    """Return ``ln Gamma(x)`` for ``x > 0``.

    Backed by the C library ``lgamma``, which is accurate to a few ulp over
    the whole range used here (relative error well below 1e-13 on
    ``[0.5, 200]``).
    """
    if x <= 0.0:
        raise DomainError(f"log_gamma requires x > 0, got {x}")
    return math.lgamma(x)


def laguerre(n: int, alpha: float, x):
    """Evaluate the generalized Laguerre polynomial ``L_n^(alpha)(x)``.

    Uses the upward three-term recurrence

        (m+1) L_{m+1} = (2m + alpha + 1 - x) L_m - (m + alpha) L_{m-1},

    which is stable for the argument ranges that occur against the weight
    ``x**a * exp(-x)``.  ``n = -1`` is accepted and returns 0, matching the
    convention used by the radial wavefunction formulas.

    ``x`` may be a scalar or an ndarray; the return type follows the input.
    """
    if alpha <= -1.0:
        raise DomainError(f"laguerre requires alpha > -1, got {alpha}")
    if n < -1:
        raise DomainError(f"laguerre requires degree >= -1, got {n}")
    x_arr = np.asarray(x, dtype=float)
    if n == -1:
        out = np.zeros_like(x_arr)
    elif n == 0:
        out = np.ones_like(x_arr)
    else:
        p_prev = np.ones_like(x_arr)
        p = alpha + 1.0 - x_arr
        for m in range(1, n):
            p, p_prev = ((2 * m + alpha + 1.0 - x_arr) * p - (m + alpha) * p_prev) / (m + 1.0), p
        out = p
    if np.isscalar(x) or x_arr.ndim == 0:
        return float(out)
    return out


def laguerre_series(coeffs: np.ndarray, alpha: float, x: np.ndarray) -> np.ndarray:
    """Evaluate ``sum_m coeffs[m] * L_m^(alpha)(x)`` for all points at once.

    The whole polynomial table ``L_0 .. L_D`` is built by the upward
    recurrence and contracted with the coefficients; cost O(D * len(x)).
    The computation runs in the dtype of ``x`` (longdouble input stays
    longdouble, which the ill-conditioned radial moments rely on).
    """
    x = np.asarray(x)
    if not np.issubdtype(x.dtype, np.floating):
        x = x.astype(float)
    acc = np.full_like(x, coeffs[0])
    if len(coeffs) == 1:
        return acc
    p_prev = np.ones_like(x)
    p = alpha + 1.0 - x
    acc = acc + coeffs[1] * p
    for m in range(1, len(coeffs) - 1):
        p, p_prev = ((2 * m + alpha + 1.0 - x) * p - (m + alpha) * p_prev) / (m + 1.0), p
        acc = acc + coeffs[m + 1] * p
    return acc


def binomial_real(nu: float, m: int) -> float:
    """Binomial coefficient ``C(nu, m)`` with real upper argument.

    Computed as the explicit product ``nu (nu-1) ... (nu-m+1) / m!`` so that
    integer upper arguments give exact zeros where they should.
    """
    if m < 0:
        return 0.0
    out = 1.0
    for i in range(m):
        out *= (nu - i) / (i + 1)
    return out


def laguerre_integral_identity(n: int, nprime: int, alpha: float, beta: float,
                               gamma: float) -> float:
    """Closed form of ``int_0^inf x**gamma e**-x L_n^(alpha)(x) L_n'^(beta)(x) dx``.

    Evaluates the finite double-binomial sum

        (-1)**(n+n') * sum_k Gamma(k+gamma+1)/k! * C(gamma-alpha, n-k)
                                                 * C(gamma-beta,  n'-k)

    valid for ``gamma > -1``.  This is the independent oracle against which
    the quadrature rules are checked (and vice versa).
    """
    if gamma <= -1.0:
        raise DomainError(f"laguerre_integral_identity requires gamma > -1, got {gamma}")
    if n < 0 or nprime < 0:
        raise DomainError("laguerre_integral_identity requires nonnegative degrees")
    total = 0.0
    for k in range(min(n, nprime) + 1):
        term = math.exp(math.lgamma(k + gamma + 1.0) - math.lgamma(k + 1.0))
        term *= binomial_real(gamma - alpha, n - k)
        term *= binomial_real(gamma - beta, nprime - k)
        total += term
    sign = -1.0 if (n + nprime) % 2 else 1.0
    return sign * total


def laguerre_product_first_moment(n: int, nprime: int, alpha: float) -> float:
    """Closed form of ``int_0^inf x**(alpha+1) e**-x L_n^(alpha) L_n'^(alpha) dx``.

    Nonzero only for ``|n - n'| <= 1``:

        n' = n+1:  -Gamma(alpha+n+2) / n!
        n' = n:    (alpha+2n+1) Gamma(alpha+n+1) / n!
        n' = n-1:  -Gamma(alpha+n+1) / (n-1)!
    """
    if alpha <= -2.0:
        raise DomainError(f"first-moment integral requires alpha > -2, got {alpha}")
    if n < 0 or nprime < 0:
        raise DomainError("degrees must be nonnegative")
    if nprime == n + 1:
        return -math.exp(math.lgamma(alpha + n + 2.0) - math.lgamma(n + 1.0))
    if nprime == n:
        return (alpha + 2 * n + 1.0) * math.exp(math.lgamma(alpha + n + 1.0) - math.lgamma(n + 1.0))
    if nprime == n - 1:
        return -math.exp(math.lgamma(alpha + n + 1.0) - math.lgamma(n))
    return 0.0


@dataclass(frozen=True)
class QuadratureRule:
    """Gauss rule for ``int_0^inf x**alpha_weight e**-x f(x) dx``.

    Exact for polynomial ``f`` of degree up to ``2*order - 1``.  Immutable
    and safely shareable across threads.  ``nodes``/``weights`` are the
    double-precision views; ``nodes_ld``/``weights_ld`` carry the same rule
    refined to extended precision, which the radial integrator uses so that
    strongly cancelling moments (condition numbers up to ~1e8) still come
    out to ~1e-11 relative accuracy.
    """
    order: int
    alpha_weight: float
    nodes: np.ndarray
    weights: np.ndarray
    nodes_ld: np.ndarray = None
    weights_ld: np.ndarray = None

    def __post_init__(self):
        if self.nodes_ld is None:
            object.__setattr__(self, "nodes_ld", self.nodes.astype(np.longdouble))
        if self.weights_ld is None:
            object.__setattr__(self, "weights_ld", self.weights.astype(np.longdouble))

    def integrate(self, f) -> float:
        """Apply the rule to a callable of the node vector."""
        return float(np.dot(self.weights, f(self.nodes)))


def _orthonormal_pi_table(a, x, n_max: int):
    """Orthonormal-polynomial values pi_0(x) .. pi_{n_max}(x) for the weight
    x**a e**-x, computed in the dtype of ``x``.

    Recurrence (orthonormal form): sqrt(b_{k+1}) pi_{k+1} =
    (x - a_k) pi_k - sqrt(b_k) pi_{k-1}, with a_k = 2k+a+1, b_k = k(k+a).
    pi_0 is normalized against the zeroth moment Gamma(a+1); since that is a
    common factor of every weight it may be taken in double precision.
    """
    one = x.dtype.type(1.0)
    pi_prev = np.zeros_like(x)
    pi = np.full_like(x, one / np.sqrt(x.dtype.type(math.gamma(a + 1.0))))
    table = [pi]
    for k in range(n_max):
        b_next = np.sqrt(x.dtype.type((k + 1) * (k + 1 + a)))
        b_here = np.sqrt(x.dtype.type(k * (k + a))) if k > 0 else x.dtype.type(0.0)
        pi_next = ((x - (2 * k + a + 1)) * pi - b_here * pi_prev) / b_next
        pi_prev, pi = pi, pi_next
        table.append(pi)
    return table


def _refine_rule_longdouble(order: int, a: float, nodes64: np.ndarray):
    """Polish Golub-Welsch nodes to longdouble and rebuild the weights.

    The nodes are the roots of the order-th orthonormal polynomial; each
    double-precision node is off by at most ~eps ||T||, so bisection on a
    +/- 1e-9 (1+x) bracket converges to the longdouble root.  Weights then
    follow from the Christoffel identity w_j = 1 / sum_k pi_k(x_j)^2.
    """
    lo = nodes64.astype(np.longdouble) - 1e-9 * (1.0 + nodes64)
    hi = nodes64.astype(np.longdouble) + 1e-9 * (1.0 + nodes64)

    def pi_n(x):
        return _orthonormal_pi_table(a, x, order)[order]

    f_lo = pi_n(lo)
    f_hi = pi_n(hi)
    bad = np.sign(f_lo) == np.sign(f_hi)
    if np.any(bad):  # widen once; beyond that something is deeply wrong
        lo = np.where(bad, lo - 1e-7 * (1.0 + nodes64), lo)
        hi = np.where(bad, hi + 1e-7 * (1.0 + nodes64), hi)
        f_lo = pi_n(lo)
        f_hi = pi_n(hi)
        if np.any(np.sign(f_lo) == np.sign(f_hi)):
            raise NumericError("failed to bracket quadrature nodes for refinement")
    for _ in range(70):
        mid = 0.5 * (lo + hi)
        f_mid = pi_n(mid)
        take_low = np.sign(f_mid) == np.sign(f_lo)
        lo = np.where(take_low, mid, lo)
        f_lo = np.where(take_low, f_mid, f_lo)
        hi = np.where(take_low, hi, mid)
    nodes_ld = 0.5 * (lo + hi)
    table = _orthonormal_pi_table(a, nodes_ld, order - 1)
    christoffel = np.zeros_like(nodes_ld)
    for pi in table:
        christoffel += pi * pi
    weights_ld = 1.0 / christoffel
    return nodes_ld, weights_ld


def gauss_generalized_laguerre(order: int, alpha_weight) -> QuadratureRule:
    """Build the Gauss rule for the weight ``x**a * exp(-x)``, real ``a > -1``.

    Golub-Welsch construction: the three-term recurrence coefficients of the
    (monic) generalized Laguerre family are assembled into a symmetric
    tridiagonal matrix whose eigenvalues are the nodes; the weights are the
    squared first eigenvector components scaled by the zeroth moment
    ``Gamma(a+1)``.  The nodes are then polished in extended precision; if
    ``alpha_weight`` is passed as a longdouble, the refined rule carries the
    weight exponent to that precision (the radial channels need this because
    their exponent 2*gamma is itself an irrational computed quantity).
    """
    if order < 1:
        raise DomainError(f"quadrature order must be >= 1, got {order}")
    a_ld = np.longdouble(alpha_weight)
    a = float(a_ld)
    if a <= -1.0:
        raise DomainError(f"weight exponent must be > -1, got {a}")
    i = np.arange(order, dtype=float)
    diag = 2.0 * i + a + 1.0
    j = np.arange(1, order, dtype=float)
    offdiag = np.sqrt(j * (j + a))
    try:
        # bisection + inverse iteration resolves the exponentially small
        # first components at far-tail nodes, where the default driver
        # flushes them to zero
        nodes, vecs = eigh_tridiagonal(diag, offdiag, lapack_driver="stebz",
                                       select="a")
    except np.linalg.LinAlgError as exc:  # pragma: no cover - LAPACK failure
        raise NumericError(
            f"Golub-Welsch eigen-iteration failed for order={order}, a={a}: {exc}"
        ) from exc
    if not (np.all(nodes > 0.0) and np.all(np.diff(nodes) > 0.0)):
        raise NumericError(
            f"quadrature nodes not strictly increasing/positive for order={order}, a={a}"
        )
    nodes_ld, weights_ld = _refine_rule_longdouble(order, a_ld, nodes)
    return QuadratureRule(order=order, alpha_weight=a,
                          nodes=nodes_ld.astype(float),
                          weights=weights_ld.astype(float),
                          nodes_ld=nodes_ld, weights_ld=weights_ld)


@lru_cache(maxsize=2048)
def _cached_rule(order: int, alpha_weight) -> QuadratureRule:
    # alpha_weight may be a float or a numpy longdouble scalar; both hash by
    # value, so equal exponents share one rule
    return gauss_generalized_laguerre(order, alpha_weight)


@dataclass(frozen=True)
class RadialFunction:
    """``exp(log_norm) * x**power * exp(-x/2) * sum_m coeffs[m] L_m^(alpha_index)(x)``
    with ``x = 2 * scale_k * r``.

    ``log_norm`` keeps the (positive) normalization in log space, so Gamma
    ratios never overflow; signs live in ``coeffs``.  Instances are immutable;
    the algebraic operations below return new objects.
    """
    scale_k: float
    power: float
    alpha_index: float
    log_norm: float
    coeffs: np.ndarray

    def __post_init__(self):
        c = np.asarray(self.coeffs)
        if not np.issubdtype(c.dtype, np.floating):
            c = c.astype(float)
        object.__setattr__(self, "coeffs", c)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, r):
        """Evaluate at ``r`` (scalar or array of positive radii)."""
        r_arr = np.asarray(r, dtype=float)
        x = 2.0 * self.scale_k * r_arr
        if np.any(x <= 0.0):
            raise DomainError("RadialFunction evaluation requires r > 0")
        env = np.exp(self.log_norm + self.power * np.log(x) - 0.5 * x)
        out = env * laguerre_series(self.coeffs, self.alpha_index, x)
        if np.isscalar(r) or r_arr.ndim == 0:
            return float(out)
        return np.asarray(out, dtype=float)

    def scaled(self, factor: float) -> "RadialFunction":
        """Multiply by a scalar."""
        return RadialFunction(self.scale_k, self.power, self.alpha_index,
                              self.log_norm, factor * self.coeffs)

    def _derivative_bracket(self) -> np.ndarray:
        # g*p - (x/2)*p + x*p' as a coefficient vector (degree rises by one)
        c = self.coeffs
        out = np.zeros(len(c) + 1, dtype=c.dtype)
        out[: len(c)] += self.power * c
        out += -0.5 * _series_times_x(c, self.alpha_index)
        out[: len(c)] += _series_x_dx(c, self.alpha_index)
        return out

    def derivative(self) -> "RadialFunction":
        """d/dr, expressed in the same family (envelope power drops by one)."""
        return RadialFunction(self.scale_k, self.power - 1.0, self.alpha_index,
                              self.log_norm + math.log(2.0 * self.scale_k),
                              self._derivative_bracket())

    def r_times_derivative(self) -> "RadialFunction":
        """r * d/dr, which preserves the envelope power."""
        return RadialFunction(self.scale_k, self.power, self.alpha_index,
                              self.log_norm, self._derivative_bracket())

    def linear_combination(self, other: "RadialFunction", wa: float, wb: float) -> "RadialFunction":
        """``wa*self + wb*other`` for functions sharing the same envelope."""
        if (self.scale_k != other.scale_k or self.power != other.power
                or self.alpha_index != other.alpha_index):
            raise DomainError("linear_combination requires identical envelopes")
        n = max(len(self.coeffs), len(other.coeffs))
        c = np.zeros(n, dtype=np.promote_types(self.coeffs.dtype, other.coeffs.dtype))
        c[: len(self.coeffs)] += wa * self.coeffs
        # rescale the other operand into this function's log scale
        c[: len(other.coeffs)] += wb * other.coeffs * math.exp(other.log_norm - self.log_norm)
        return RadialFunction(self.scale_k, self.power, self.alpha_index, self.log_norm, c)


def _series_times_x(c: np.ndarray, alpha: float) -> np.ndarray:
    """Coefficients of x * sum c_n L_n, via
    x L_n = (2n+alpha+1) L_n - (n+1) L_{n+1} - (n+alpha) L_{n-1}."""
    out = np.zeros(len(c) + 1, dtype=c.dtype)
    for n, cn in enumerate(c):
        if cn == 0.0:
            continue
        out[n] += (2 * n + alpha + 1.0) * cn
        out[n + 1] -= (n + 1.0) * cn
        if n >= 1:
            out[n - 1] -= (n + alpha) * cn
    return out


def _series_x_dx(c: np.ndarray, alpha: float) -> np.ndarray:
    """Coefficients of x * d/dx sum c_n L_n, via x L_n' = n L_n - (n+alpha) L_{n-1}."""
    out = np.zeros(len(c), dtype=c.dtype)
    for n, cn in enumerate(c):
        if cn == 0.0 or n == 0:
            continue
        out[n] += n * cn
        out[n - 1] -= (n + alpha) * cn
    return out


def integrate_radial_product(factors: Sequence[RadialFunction], r_power: int = 0,
                             order: int | None = None) -> float:
    """``int_0^inf r**r_power * prod_i f_i(r) dr`` for RadialFunction factors.

    The combined integrand is ``C * u**a * exp(-u) * H(u)`` with
    ``u = (sum_i k_i) r``, ``a = sum_i power_i + r_power`` and ``H`` a
    polynomial of degree ``sum_i degree_i``, so a Gauss rule with enough
    points is exact.  The default order follows the package policy
    ``max(32, total_degree + 8)``, a comfortable margin over the
    ``(total_degree + 1) / 2`` needed for exactness.
    """
    if not factors:
        raise DomainError("integrate_radial_product needs at least one factor")
    s = sum(f.scale_k for f in factors)
    a = sum(np.longdouble(f.power) for f in factors) + np.longdouble(r_power)
    if a <= -1.0:
        raise DomainError(f"combined weight exponent {a} <= -1 is not integrable")
    total_degree = sum(f.degree for f in factors)
    if order is None:
        # round up to multiples of 8 so the rule cache is reused across the
        # many nearby degree sums
        order = max(32, ((total_degree + 8 + 7) // 8) * 8)
    rule = _cached_rule(order, a)
    u = rule.nodes_ld
    h = np.ones_like(u)
    for f in factors:
        scale = np.longdouble(2.0 * f.scale_k) / np.longdouble(s)
        h = h * laguerre_series(f.coeffs, f.alpha_index, scale * u)
    log_c = sum(f.log_norm + f.power * math.log(2.0 * f.scale_k) for f in factors)
    log_c -= (a + 1.0) * math.log(s)
    return math.exp(log_c) * float(np.dot(rule.weights_ld, h))
