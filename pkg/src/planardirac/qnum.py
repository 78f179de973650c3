"""Quantum numbers, physical configuration, and state enumeration.

Half-odd-integer quantum numbers (kappa, m_kappa) are stored as the integers
2*kappa and 2*m_kappa so that equality and sign tests stay exact.  The sign
convention for kappa follows the planar problem solved here: the spectroscopic
letter is l = |kappa + 1/2|, and for a given subshell nl_j the state with
l = j - 1/2 has kappa = -j while l = j + 1/2 has kappa = +j.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field

from .errors import DomainError, NoBoundStateError, SupercriticalChargeError

__all__ = [
    "ALPHA_CODATA",
    "B0_TESLA",
    "PhysicsConfig",
    "QuantumState",
    "atomic_unit_of_induction_tesla",
    "big_n",
    "enumerate_states",
    "gamma_kappa",
    "ml_ms",
    "parse_state_label",
    "spectroscopic_label",
]

#: CODATA recommended inverse fine-structure constant.
ALPHA_CODATA = 1.0 / 137.035999084

# CODATA 2018 SI values used only for unit conversion at the output boundary.
_HBAR_SI = 1.054571817e-34      # J s
_E_SI = 1.602176634e-19         # C
_BOHR_SI = 5.29177210903e-11    # m

_ANGULAR_LETTERS = "spdfghiklmnoqrtuv"


def atomic_unit_of_induction_tesla() -> float:
    """The atomic unit of magnetic induction, hbar/(e a0^2), in tesla."""
    return _HBAR_SI / (_E_SI * _BOHR_SI ** 2)


#: Numeric value of the atomic unit of induction (about 2.35e5 T).
B0_TESLA = atomic_unit_of_induction_tesla()


def _require_half_odd(value: float, name: str) -> int:
    """Return 2*value as an int, requiring value to be a half-odd-integer."""
    doubled = 2.0 * value
    rounded = round(doubled)
    if abs(doubled - rounded) > 1e-12 or rounded % 2 == 0:
        raise DomainError(f"{name} must be a half-odd-integer, got {value}")
    return int(rounded)


@dataclass(frozen=True)
class QuantumState:
    """A bound state (n, kappa, m_kappa) of the planar Dirac-Coulomb problem.

    Construct with :meth:`make` from half-odd-integer kappa and m_kappa, or
    directly from the doubled integers.
    """
    n: int
    two_kappa: int
    two_m_kappa: int

    def __post_init__(self):
        if self.n < 1:
            raise DomainError(f"principal quantum number must be >= 1, got {self.n}")
        if self.two_kappa == 0 or self.two_kappa % 2 == 0:
            raise DomainError(f"2*kappa must be an odd integer, got {self.two_kappa}")
        if abs(self.two_m_kappa) != abs(self.two_kappa):
            raise DomainError(
                f"m_kappa must be +/-kappa, got 2m={self.two_m_kappa} for 2k={self.two_kappa}")
        two_n_r = 2 * self.n - abs(self.two_kappa) - 1
        if two_n_r < 0 or two_n_r % 2 != 0:
            raise DomainError(
                f"no radial quantum number for n={self.n}, kappa={self.kappa}")
        if self.two_kappa > 0 and two_n_r == 0:
            raise NoBoundStateError(
                f"n={self.n}, kappa={self.kappa}: no planar Dirac-Coulomb bound state "
                "(kappa >= 1/2 requires n_r >= 1)")

    @classmethod
    def make(cls, n: int, kappa: float, m_kappa: float | None = None) -> "QuantumState":
        two_kappa = _require_half_odd(kappa, "kappa")
        if m_kappa is None:
            two_m = abs(two_kappa)
        else:
            two_m = _require_half_odd(m_kappa, "m_kappa")
        return cls(n=n, two_kappa=two_kappa, two_m_kappa=two_m)

    @property
    def kappa(self) -> float:
        return self.two_kappa / 2.0

    @property
    def m_kappa(self) -> float:
        return self.two_m_kappa / 2.0

    @property
    def n_r(self) -> int:
        return (2 * self.n - abs(self.two_kappa) - 1) // 2

    @property
    def l(self) -> int:
        return abs(self.two_kappa + 1) // 2

    @property
    def label(self) -> str:
        return spectroscopic_label(self)

    def with_m_sign(self, sign: int) -> "QuantumState":
        """Same (n, kappa) with m_kappa = sign * |kappa|."""
        if sign not in (+1, -1):
            raise DomainError("sign must be +1 or -1")
        return QuantumState(self.n, self.two_kappa, sign * abs(self.two_kappa))


@dataclass(frozen=True)
class PhysicsConfig:
    """Nuclear charge and coupling-strength configuration.

    ``alpha_scale`` multiplies the fine-structure constant; scanning it toward
    zero realizes the nonrelativistic limit with everything else fixed.
    Internally the package works in Hartree atomic units, where the speed of
    light is 1/(alpha*alpha_scale).
    """
    Z: float = 1.0
    alpha: float = ALPHA_CODATA
    alpha_scale: float = 1.0

    def __post_init__(self):
        if self.Z <= 0.0:
            raise DomainError(f"Z must be positive, got {self.Z}")
        if self.alpha <= 0.0 or self.alpha_scale <= 0.0:
            raise DomainError("alpha and alpha_scale must be positive")
        if self.Z >= 0.5 / self.alpha_eff:
            raise DomainError(
                f"Z = {self.Z} violates the bound-state constraint Z < 1/(2*alpha_eff) "
                f"= {0.5 / self.alpha_eff:.6g}")

    @property
    def alpha_eff(self) -> float:
        return self.alpha * self.alpha_scale

    @property
    def coupling(self) -> float:
        """The dimensionless Coulomb coupling alpha_eff * Z."""
        return self.alpha_eff * self.Z

    @property
    def c(self) -> float:
        """Speed of light in Hartree atomic units."""
        return 1.0 / self.alpha_eff

    @property
    def mc2(self) -> float:
        """Electron rest energy in Hartree atomic units."""
        return self.c ** 2


def gamma_kappa(kappa: float, config: PhysicsConfig) -> float:
    """sqrt(kappa^2 - (alpha Z)^2), the small-r exponent of the radial channel."""
    two_kappa = _require_half_odd(kappa, "kappa")
    az = config.coupling
    k2 = (two_kappa / 2.0) ** 2
    if az >= abs(two_kappa) / 2.0:
        raise SupercriticalChargeError(
            f"supercritical charge for this kappa: alpha*Z = {az:.6g} >= |kappa| = "
            f"{abs(two_kappa) / 2.0}")
    return math.sqrt(k2 - az * az)


def big_n(n_r: int, kappa: float, config: PhysicsConfig) -> float:
    """Apparent principal quantum number sqrt(n_r^2 + 2 n_r gamma + kappa^2)."""
    if n_r < 0:
        raise DomainError(f"n_r must be nonnegative, got {n_r}")
    g = gamma_kappa(kappa, config)
    k2 = (kappa) ** 2
    return math.sqrt(n_r * n_r + 2.0 * n_r * g + k2)


def enumerate_states(n_max: int) -> list[QuantumState]:
    """All bound states with principal quantum number up to ``n_max``.

    For each n the count is 2(2n-1): every |kappa| <= n - 1/2 appears with
    both signs of kappa and both signs of m_kappa, except that kappa >= 1/2
    with n_r = 0 (i.e. kappa = n - 1/2) is excluded.
    """
    if n_max < 1:
        raise DomainError(f"n_max must be >= 1, got {n_max}")
    states = []
    for n in range(1, n_max + 1):
        for two_abs_kappa in range(1, 2 * n, 2):
            for sign_kappa in (-1, +1):
                two_kappa = sign_kappa * two_abs_kappa
                if two_kappa > 0 and two_abs_kappa == 2 * n - 1:
                    continue
                for sign_m in (+1, -1):
                    states.append(QuantumState(n, two_kappa, sign_m * two_abs_kappa))
    return states


def spectroscopic_label(state: QuantumState) -> str:
    """Label ``nl_{|kappa|}`` with the usual letter code for l = |kappa + 1/2|."""
    l = state.l
    if l >= len(_ANGULAR_LETTERS):
        raise DomainError(f"no letter assigned for l = {l}")
    return f"{state.n}{_ANGULAR_LETTERS[l]}_{{{abs(state.two_kappa)}/2}}"


_LABEL_RE = re.compile(r"^(\d+)([a-z])_?\{?(\d+)/2\}?$")


def parse_state_label(text: str) -> QuantumState:
    """Parse labels like ``2p3/2`` or ``2p_{3/2}``, or a ``n,2kappa`` pair.

    The returned state carries m_kappa = +|kappa|.
    """
    text = text.strip()
    if "," in text:
        parts = text.split(",")
        if len(parts) != 2:
            raise DomainError(f"cannot parse state spec {text!r}")
        n, two_kappa = int(parts[0]), int(parts[1])
        return QuantumState(n, two_kappa, abs(two_kappa))
    m = _LABEL_RE.match(text)
    if not m:
        raise DomainError(f"cannot parse state label {text!r}")
    n = int(m.group(1))
    letter = m.group(2)
    if letter not in _ANGULAR_LETTERS:
        raise DomainError(f"unknown angular letter {letter!r}")
    l = _ANGULAR_LETTERS.index(letter)
    two_j = int(m.group(3))
    # l = |kappa + 1/2|: kappa = -j gives l = j - 1/2, kappa = +j gives l = j + 1/2
    if two_j == 2 * l + 1:
        two_kappa = -two_j
    elif two_j == 2 * l - 1 and two_j > 0:
        two_kappa = two_j
    else:
        raise DomainError(f"inconsistent (l, j) in label {text!r}")
    return QuantumState(n, two_kappa, abs(two_kappa))


def ml_ms(kappa: float, m_kappa: float) -> tuple[int, float]:
    """Map (kappa, m_kappa) to the nonrelativistic pair (m_l, m_s).

    m_l = m_kappa + m_kappa/(2 kappa) is an integer, m_s = -m_kappa/(2 kappa)
    is +/-1/2; the inverse map kappa = -(1 + m_l/m_s)/2, m_kappa = m_l + m_s
    round-trips exactly.
    """
    two_kappa = _require_half_odd(kappa, "kappa")
    two_m = _require_half_odd(m_kappa, "m_kappa")
    if abs(two_m) != abs(two_kappa):
        raise DomainError("m_kappa must be +/-kappa")
    sgn = 1 if two_m * two_kappa > 0 else -1
    m_l = (two_m + sgn) // 2
    m_s = -sgn / 2.0
    return m_l, m_s
