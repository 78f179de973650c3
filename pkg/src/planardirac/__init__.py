"""Zeeman structure and magnetizability of the relativistic planar
hydrogen-like atom.

A numpy/scipy library computing bound-state energies, first- and
second-order Zeeman coefficients, and magnetizabilities of a two-dimensional
Dirac electron bound to a point charge in a weak perpendicular magnetic
field.  Every closed form is cross-verified by independent numerical
machinery: generalized Gauss-Laguerre quadrature, truncated Sturmian sums,
and variational diagonalization.
"""

from .coulomb import (EnergyBreakdown, RadialOrbital, energy0, eps0_coefficient,
                      epsilon_small, radial_orbital)
from .errors import (DomainError, NoBoundStateError, NumericError,
                     OverlapMismatchError, PlanarDiracError,
                     StateTrackingError, SupercriticalChargeError)
from .limits import (nonrel_eps0, nonrel_eps1, nonrel_eps2, nonrel_eps2_l_form,
                     quasirel_eps0, quasirel_eps1, quasirel_eps2)
from .perturb import (OverlapTable, build_overlap_table, e1_coefficient,
                      e1_via_quadrature, e2_assembled, e2_coefficient,
                      magnetizability, overlap_integrals, zeeman_breakdown)
from .qnum import (ALPHA_CODATA, B0_TESLA, PhysicsConfig, QuantumState, big_n,
                   enumerate_states, gamma_kappa, ml_ms, parse_state_label,
                   spectroscopic_label)
from .specfun import (QuadratureRule, RadialFunction, gauss_generalized_laguerre,
                      integrate_radial_product, laguerre,
                      laguerre_integral_identity, log_gamma)
from .spinors import AxialSpinor, spinor_inner_product, verify_operator_actions
from .sturmian import (SturmianFunction, ijk_functions, mu_eigenvalue,
                       sturmian_energy_derivative, sturmian_pair,
                       sturmian_pair_at_bound)
from .variational import (ChannelMatrixProblem, build_channel_matrices,
                          perturbation_cross_check, solve_generalized_symmetric)

__version__ = "0.1.0"
