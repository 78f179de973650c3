import math

import numpy as np
import pytest

from planardirac.coulomb import (energy0, eps0_coefficient, epsilon_small,
                                 radial_orbital)
from planardirac.errors import NoBoundStateError
from planardirac.qnum import PhysicsConfig, QuantumState, big_n, gamma_kappa
from planardirac.specfun import integrate_radial_product

from conftest import channels

# frozen multiprecision values at Z=1, CODATA alpha
EPS0_2P32_Z1 = -0.2222235370860416496727802
E0_OVER_MC2_2P32_Z1 = 0.9999881662956438466296596


class TestEnergies:
    def test_ground_state_form(self, config):
        st = QuantumState.make(1, -0.5)
        g = gamma_kappa(-0.5, config)
        assert energy0(st, config) == pytest.approx(2.0 * g, rel=1e-15)

    def test_eps0_ground_state_literal(self, config):
        st = QuantumState.make(1, -0.5)
        az = config.coupling
        g = gamma_kappa(-0.5, config)
        literal = (2.0 * g - 1.0) / (az * az)
        assert eps0_coefficient(st, config) == pytest.approx(literal, rel=1e-12)
        # nonrelativistic limit
        tiny = PhysicsConfig(Z=1.0, alpha_scale=1e-6)
        assert eps0_coefficient(st, tiny) == pytest.approx(-2.0, rel=1e-10)

    def test_eps0_2p32_multiprecision(self, config):
        st = QuantumState.make(2, -1.5)
        assert eps0_coefficient(st, config) == pytest.approx(EPS0_2P32_Z1, rel=1e-14)
        assert energy0(st, config) == pytest.approx(E0_OVER_MC2_2P32_Z1, rel=1e-15)

    def test_two_energy_paths_agree(self, config, config_z10):
        for cfg in (config, config_z10):
            for st in channels(5):
                a = energy0(st, cfg)
                b = epsilon_small(st, cfg)
                assert abs(a - b) <= 1e-13 * a

    def test_epsilon_aux_identity(self, config_z10):
        # sqrt((1-eps)/(1+eps)) = alpha Z/(n_r + gamma + N) for the 2s state
        st = QuantumState.make(2, -0.5)
        cfg = config_z10
        eps = epsilon_small(st, cfg)
        lhs = math.sqrt((1.0 - eps) / (1.0 + eps))
        g = gamma_kappa(st.kappa, cfg)
        rhs = cfg.coupling / (st.n_r + g + big_n(st.n_r, st.kappa, cfg))
        assert lhs == pytest.approx(rhs, rel=1e-12)

    def test_rest_energy_dominance(self):
        cfg = PhysicsConfig(Z=1e-8)
        st = QuantumState.make(1, -0.5)
        assert epsilon_small(st, cfg) == pytest.approx(1.0, abs=1e-15)

    def test_bounds_and_monotonicity(self, config_z10):
        for two_kappa in (-1, 1, -3, 3):
            energies = []
            for n in range(1, 7):
                try:
                    st = QuantumState(n, two_kappa, abs(two_kappa))
                except Exception:
                    continue
                e = energy0(st, config_z10)
                assert 0.0 < e < 1.0
                energies.append(e)
            assert all(b > a for a, b in zip(energies, energies[1:]))


class TestRadialOrbital:
    def test_normalization_n_le_5(self, config, config_z10):
        for cfg in (config, config_z10):
            for st in channels(5):
                orb = radial_orbital(st, cfg)
                assert orb.norm_integral() == pytest.approx(1.0, abs=1e-10)

    def test_ground_state_single_term(self, config):
        orb = radial_orbital(QuantumState.make(1, -0.5), config)
        # n_r = 0 leaves only the degree-0 coefficient
        assert orb.P.degree == 0
        assert orb.Q.degree == 0

    def test_q_sign_relative_to_p(self, config):
        # with the printed overall minus on Q, the n_r = 0 brackets collapse
        # so that Q/P = +sqrt((1-eps)/(1+eps)) pointwise
        st = QuantumState.make(1, -0.5)
        orb = radial_orbital(st, config)
        r = np.array([0.5, 1.0, 3.0])
        g = gamma_kappa(st.kappa, config)
        eps_aux = config.coupling / (g + 0.5)
        assert np.allclose(orb.Q(r) / orb.P(r), eps_aux, rtol=1e-12)
        assert np.all(orb.P(r) * orb.Q(r) > 0)

    def test_same_channel_orthogonality(self, config):
        for two_kappa in (-1, 1, -3):
            orbs = []
            for n in range(1, 6):
                try:
                    orbs.append(radial_orbital(
                        QuantumState(n, two_kappa, abs(two_kappa)), config))
                except Exception:
                    continue
            for i in range(len(orbs)):
                for j in range(i + 1, len(orbs)):
                    ov = (integrate_radial_product([orbs[i].P, orbs[j].P])
                          + integrate_radial_product([orbs[i].Q, orbs[j].Q]))
                    assert abs(ov) < 1e-9

    @pytest.mark.parametrize("n,two_kappa,expected_nodes", [
        (1, -1, 0), (2, -1, 1), (3, -1, 2), (4, -1, 3),
        (2, 1, 0), (3, 1, 1), (4, 1, 2),
        (2, -3, 0), (3, -3, 1), (3, 3, 0),
    ])
    def test_node_counts(self, config_z10, n, two_kappa, expected_nodes):
        # n_r sign changes for kappa < 0, n_r - 1 for kappa > 0
        orb = radial_orbital(QuantumState(n, two_kappa, abs(two_kappa)), config_z10)
        r = np.linspace(1e-3, 40.0 / orb.scale_k * 0.1, 4000)
        vals = orb.P(r)
        signs = np.sign(vals)
        changes = int(np.sum(signs[1:] * signs[:-1] < 0))
        assert changes == expected_nodes

    def test_eigen_residual(self, config):
        # <psi, (H0 - E0) psi> below 1e-8 Hartree, H0 applied analytically
        from planardirac.variational import h0_expectation
        for st in channels(3):
            orb = radial_orbital(st, config)
            resid = h0_expectation(orb.P, orb.Q, st.kappa, config) \
                - energy0(st, config) * config.mc2
            assert abs(resid) < 1e-8

    def test_invalid_state_unrepresentable(self):
        with pytest.raises(NoBoundStateError):
            QuantumState.make(3, +2.5)
