"""Literal per-state coefficient formulas for the nine tabulated states.

These are independent transcriptions of the closed per-state expressions
(functions of gamma_{1/2}, gamma_{3/2} or gamma_{5/2} only), kept separate
from the general formulas in :mod:`coulomb` / :mod:`perturb` so the two can
be played against each other.  The nonrelativistic columns are exact
rationals.

The printed forms subtract nearly equal terms in the weak-coupling regime
(e.g. 2(g+1)/sqrt(8g+5) - 1 for the kappa = +1/2 states), so they are
evaluated in extended precision (numpy longdouble) and rounded once at the
end; the values then represent the formulas to ~1e-14 relative even at
alpha Z ~ 1/137.

eps1 entries are the coefficients of sgn(m_kappa).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .qnum import PhysicsConfig, QuantumState

__all__ = ["TableRow", "TABLE_ROWS", "table_rows", "gamma_for"]

_LD = np.longdouble


def _sqrt(x):
    return np.sqrt(_LD(x))


@dataclass(frozen=True)
class TableRow:
    label: str
    n: int
    two_kappa: int
    eps0_exact: object          # callable (alpha_z, gamma) -> float
    eps0_nonrel: Fraction
    eps1_exact: object          # callable (gamma) -> float, coefficient of sgn(m)
    eps1_nonrel: Fraction
    eps2_exact: object          # callable (gamma) -> float
    eps2_nonrel: Fraction

    @property
    def state(self) -> QuantumState:
        return QuantumState(self.n, self.two_kappa, abs(self.two_kappa))


def _e0_1s(az, g):
    return (2.0 * g - 1.0) / (az * az)


def _e0_n2_k12(az, g):
    return (2.0 * (g + 1.0) / _sqrt(8.0 * g + 5.0) - 1.0) / (az * az)


def _e0_2p32(az, g):
    return (2.0 * g / 3.0 - 1.0) / (az * az)


def _e0_n3_k12(az, g):
    return (2.0 * (g + 2.0) / _sqrt(16.0 * g + 17.0) - 1.0) / (az * az)


def _e0_n3_k32(az, g):
    return (2.0 * (g + 1.0) / _sqrt(8.0 * g + 13.0) - 1.0) / (az * az)


def _e0_3d52(az, g):
    return (2.0 * g / 5.0 - 1.0) / (az * az)


def _e1_1s(g):
    return 0.25 * (2.0 * g + 1.0)


def _e1_2s(g):
    return 0.25 * (2.0 * (g + 1.0) / _sqrt(8.0 * g + 5.0) + 1.0)


def _e1_2p12(g):
    return 0.25 * (2.0 * (g + 1.0) / _sqrt(8.0 * g + 5.0) - 1.0)


def _e1_2p32(g):
    return 0.25 * (2.0 * g + 1.0)


def _e1_3s(g):
    return 0.25 * (2.0 * (g + 2.0) / _sqrt(16.0 * g + 17.0) + 1.0)


def _e1_3p12(g):
    return 0.25 * (2.0 * (g + 2.0) / _sqrt(16.0 * g + 17.0) - 1.0)


def _e1_3p32(g):
    return 0.25 * (6.0 * (g + 1.0) / _sqrt(8.0 * g + 13.0) + 1.0)


def _e1_3d32(g):
    return 0.25 * (6.0 * (g + 1.0) / _sqrt(8.0 * g + 13.0) - 1.0)


def _e1_3d52(g):
    return 0.25 * (2.0 * g + 1.0)


def _e2_1s(g):
    return (2.0 * g + 1.0) * (8.0 * g * g + 4.0 * g - 1.0) / 128.0


def _e2_2s(g):
    root = _sqrt(8.0 * g + 5.0)
    cubic = 32.0 * g ** 3 + 184.0 * g * g + 196.0 * g + 59.0
    return (16.0 * g * g + 24.0 * g + 11.0 + 2.0 * (g + 1.0) * cubic / root) / 128.0


def _e2_2p12(g):
    root = _sqrt(8.0 * g + 5.0)
    cubic = 32.0 * g ** 3 + 184.0 * g * g + 196.0 * g + 59.0
    return (-16.0 * g * g - 24.0 * g - 11.0 + 2.0 * (g + 1.0) * cubic / root) / 128.0


def _e2_2p32(g):
    return 3.0 * (2.0 * g + 1.0) * (8.0 * g * g + 4.0 * g - 9.0) / 128.0


def _e2_3s(g):
    root = _sqrt(16.0 * g + 17.0)
    cubic = 64.0 * g ** 3 + 712.0 * g * g + 1352.0 * g + 713.0
    return (16.0 * g * g + 48.0 * g + 47.0 + 2.0 * (g + 2.0) * cubic / root) / 128.0


def _e2_3p12(g):
    root = _sqrt(16.0 * g + 17.0)
    cubic = 64.0 * g ** 3 + 712.0 * g * g + 1352.0 * g + 713.0
    return (-16.0 * g * g - 48.0 * g - 47.0 + 2.0 * (g + 2.0) * cubic / root) / 128.0


def _e2_3p32(g):
    root = _sqrt(8.0 * g + 13.0)
    cubic = 32.0 * g ** 3 + 248.0 * g * g + 356.0 * g + 75.0
    return (48.0 * g * g + 72.0 * g + 9.0 + 2.0 * (g + 1.0) * cubic / root) / 128.0


def _e2_3d32(g):
    root = _sqrt(8.0 * g + 13.0)
    cubic = 32.0 * g ** 3 + 248.0 * g * g + 356.0 * g + 75.0
    return (-48.0 * g * g - 72.0 * g - 9.0 + 2.0 * (g + 1.0) * cubic / root) / 128.0


def _e2_3d52(g):
    return 5.0 * (2.0 * g + 1.0) * (8.0 * g * g + 4.0 * g - 25.0) / 128.0


TABLE_ROWS: tuple[TableRow, ...] = (
    TableRow("1s_{1/2}", 1, -1, _e0_1s, Fraction(-2), _e1_1s, Fraction(1, 2),
             _e2_1s, Fraction(3, 64)),
    TableRow("2s_{1/2}", 2, -1, _e0_n2_k12, Fraction(-2, 9), _e1_2s, Fraction(1, 2),
             _e2_2s, Fraction(117, 64)),
    TableRow("2p_{1/2}", 2, +1, _e0_n2_k12, Fraction(-2, 9), _e1_2p12, Fraction(0),
             _e2_2p12, Fraction(45, 32)),
    TableRow("2p_{3/2}", 2, -3, _e0_2p32, Fraction(-2, 9), _e1_2p32, Fraction(1),
             _e2_2p32, Fraction(45, 32)),
    TableRow("3s_{1/2}", 3, -1, _e0_n3_k12, Fraction(-2, 25), _e1_3s, Fraction(1, 2),
             _e2_3s, Fraction(825, 64)),
    TableRow("3p_{1/2}", 3, +1, _e0_n3_k12, Fraction(-2, 25), _e1_3p12, Fraction(0),
             _e2_3p12, Fraction(375, 32)),
    TableRow("3p_{3/2}", 3, -3, _e0_n3_k32, Fraction(-2, 25), _e1_3p32, Fraction(1),
             _e2_3p32, Fraction(375, 32)),
    TableRow("3d_{3/2}", 3, +3, _e0_n3_k32, Fraction(-2, 25), _e1_3d32, Fraction(1, 2),
             _e2_3d32, Fraction(525, 64)),
    TableRow("3d_{5/2}", 3, -5, _e0_3d52, Fraction(-2, 25), _e1_3d52, Fraction(3, 2),
             _e2_3d52, Fraction(525, 64)),
)


def gamma_for(row: TableRow, config: PhysicsConfig):
    """gamma_{|kappa|} for the row's channel, in extended precision."""
    az = _LD(config.alpha) * _LD(config.alpha_scale) * _LD(config.Z)
    k = _LD(abs(row.two_kappa)) / 2
    return _sqrt(k * k - az * az)


def table_rows() -> tuple[TableRow, ...]:
    return TABLE_ROWS
