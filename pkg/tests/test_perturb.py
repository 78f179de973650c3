import math

import pytest

from planardirac.coulomb import radial_orbital
from planardirac.errors import DomainError
from planardirac.limits import nonrel_eps1, nonrel_eps2
from planardirac.perturb import (build_overlap_table, e1_bracket, e1_coefficient,
                                 e1_via_quadrature, e2_assembled, e2_coefficient,
                                 magnetizability, magnetizability_ground,
                                 magnetizability_nr0, overlap_integrals,
                                 overlap_integrals_closed,
                                 overlap_integrals_quadrature,
                                 radial_first_moment, zeeman_breakdown)
from planardirac.qnum import PhysicsConfig, QuantumState, gamma_kappa

from conftest import channels


class TestFirstOrder:
    def test_ground_state_table_form(self, config):
        g = gamma_kappa(-0.5, config)
        for sign in (+1, -1):
            st = QuantumState(1, -1, sign)
            assert e1_coefficient(st, config) == pytest.approx(
                sign * 0.25 * (2 * g + 1), rel=1e-14)

    def test_nonrel_limits_match_table(self):
        tiny = PhysicsConfig(Z=1.0, alpha_scale=1e-5)
        cases = [
            (QuantumState.make(1, -0.5), 0.5),
            (QuantumState.make(2, 0.5), 0.0),
            (QuantumState.make(3, -2.5), 1.5),
        ]
        for st, ref in cases:
            got = e1_coefficient(st, tiny)
            assert got == pytest.approx(ref, abs=1e-9)
            assert nonrel_eps1(st) == ref

    def test_quadrature_matches_closed_all_states(self, config):
        for st in channels(4):
            closed = e1_coefficient(st, config)
            quad = e1_via_quadrature(st, config)
            assert abs(quad - closed) <= 1e-10 * max(abs(closed), 0.01)

    def test_first_moment_nr0_form(self, config):
        # n_r = 0: int r P Q = (alpha a0/4)(1 + 2 gamma) for kappa = -1/2
        st = QuantumState.make(1, -0.5)
        g = gamma_kappa(-0.5, config)
        ref = 0.25 * config.alpha_eff * (1.0 + 2.0 * g)
        assert radial_first_moment(st, config) == pytest.approx(ref, rel=1e-10)

    def test_bracket_depends_only_on_coupling(self):
        # eps1 is a function of alpha*Z alone: trade Z against alpha_scale
        st = QuantumState.make(2, 0.5)
        a = e1_coefficient(st, PhysicsConfig(Z=2.0, alpha_scale=1.0))
        b = e1_coefficient(st, PhysicsConfig(Z=1.0, alpha_scale=2.0))
        assert a == pytest.approx(b, rel=1e-14)

    def test_antisymmetry_in_m(self, config_z10):
        for st in channels(3):
            plus = e1_coefficient(st.with_m_sign(+1), config_z10)
            minus = e1_coefficient(st.with_m_sign(-1), config_z10)
            assert plus == -minus

    def test_stable_bracket_at_weak_coupling(self):
        # kappa = +1/2 bracket reduces to (aZ)^2/(N(N + n_r + gamma)) exactly
        tiny = PhysicsConfig(Z=1.0, alpha_scale=1e-4)
        st = QuantumState.make(2, 0.5)
        az2 = tiny.coupling ** 2
        got = e1_bracket(st, tiny)
        g = gamma_kappa(0.5, tiny)
        n_cap = math.sqrt(1 + 2 * g + 0.25)
        assert got == pytest.approx(az2 / (n_cap * (n_cap + 1 + g)), rel=1e-12)


class TestOverlapIntegrals:
    def test_selection_rules_nr0(self, config):
        # 1s: integral_A fires only at |n'| = 1; integral_B adds |n'| = 2
        st = QuantumState.make(1, -0.5)
        table = build_overlap_table(st, config, max_offset=5)
        scale = config.alpha_eff / config.Z
        for n_prime, (a, b) in table.entries.items():
            if abs(n_prime) == 1:
                assert abs(a) > 1e-3 * scale
            else:
                assert abs(a) < 1e-10 * scale
            if abs(n_prime) in (1, 2):
                assert abs(b) > 1e-4 * scale
            else:
                assert abs(b) < 1e-10 * scale

    def test_selection_windows_nr_le_3(self, config):
        for st in channels(4):
            n_r = st.n_r
            table = build_overlap_table(st, config, max_offset=4)
            scale = config.alpha_eff / config.Z
            for n_prime, (a, b) in table.entries.items():
                in_a = abs(n_prime) in (n_r - 1, n_r + 1) or n_prime == -n_r
                in_b = (n_r - 2 <= abs(n_prime) <= n_r + 2) or n_prime == -n_r
                if not in_a:
                    assert abs(a) < 1e-10 * scale
                if not in_b:
                    assert abs(b) < 1e-10 * scale

    def test_far_entry_vanishes(self, config):
        a, b = overlap_integrals_quadrature(QuantumState.make(2, -0.5), 5, config)
        scale = config.alpha_eff / config.Z
        assert abs(a) < 1e-10 * scale and abs(b) < 1e-10 * scale

    def test_closed_vs_quadrature_all_channels(self, config_z10):
        for st in channels(3):
            for n_prime in range(-(st.n_r + 3), st.n_r + 4):
                if n_prime == st.n_r:
                    continue
                qa, qb = overlap_integrals_quadrature(st, n_prime, config_z10)
                ca, cb = overlap_integrals_closed(st, n_prime, config_z10)
                scale = config_z10.alpha_eff / config_z10.Z
                assert abs(qa - ca) <= 1e-9 * max(abs(ca), scale)
                assert abs(qb - cb) <= 1e-9 * max(abs(cb), scale)

    def test_checked_interface(self, config):
        a, b = overlap_integrals(QuantumState.make(2, -0.5), 2, config)
        ca, cb = overlap_integrals_closed(QuantumState.make(2, -0.5), 2, config)
        assert a == pytest.approx(ca, rel=1e-9)
        assert b == pytest.approx(cb, rel=1e-9)

    def test_diagonal_excluded(self, config):
        with pytest.raises(DomainError):
            overlap_integrals(QuantumState.make(2, -0.5), 1, config)


class TestSecondOrder:
    def test_ground_state_table_form(self, config):
        g = gamma_kappa(-0.5, config)
        ref = (2 * g + 1) * (8 * g * g + 4 * g - 1) / 128.0
        assert e2_coefficient(QuantumState.make(1, -0.5), config) == pytest.approx(
            ref, rel=1e-14)

    def test_2p32_table_form(self, config):
        g = gamma_kappa(-1.5, config)
        ref = 3.0 * (2 * g + 1) * (8 * g * g + 4 * g - 9) / 128.0
        assert e2_coefficient(QuantumState.make(2, -1.5), config) == pytest.approx(
            ref, rel=1e-14)

    def test_nonrel_values(self):
        tiny = PhysicsConfig(Z=1.0, alpha_scale=1e-6)
        for st, ref in [(QuantumState.make(1, -0.5), 3 / 64),
                        (QuantumState.make(2, -1.5), 45 / 32),
                        (QuantumState.make(3, -2.5), 525 / 64)]:
            assert e2_coefficient(st, tiny) == pytest.approx(ref, rel=1e-10)
            assert nonrel_eps2(st) == pytest.approx(ref, rel=1e-15)

    @pytest.mark.parametrize("z", [1.0, 10.0, 40.0, 60.0])
    def test_two_path_equality(self, z):
        cfg = PhysicsConfig(Z=z)
        for st in channels(4):
            closed = e2_coefficient(st, cfg)
            assembled = e2_assembled(st, cfg)
            assert assembled == pytest.approx(closed, rel=1e-9)

    def test_truncation_tail(self, config):
        st = QuantumState.make(1, -0.5)
        narrow = e2_assembled(st, config, max_offset=2)
        wide = e2_assembled(st, config, max_offset=6)
        assert abs(wide - narrow) < 1e-12 * abs(wide)

    def test_nr0_special_form_matches_general(self, config_z10):
        # the n_r = 0 closed form against the general polynomial form
        for st in [QuantumState.make(1, -0.5), QuantumState.make(2, -1.5),
                   QuantumState.make(3, -2.5)]:
            g = gamma_kappa(st.kappa, config_z10)
            half = st.n - 0.5
            special = (half / 16.0) * (2 * g + 1) * (2 * g * g + g - half * half)
            assert e2_coefficient(st, config_z10) == pytest.approx(special, rel=1e-12)

    def test_m_independence_bit_identical(self, config_z10):
        for st in channels(3):
            up = e2_coefficient(st.with_m_sign(+1), config_z10)
            down = e2_coefficient(st.with_m_sign(-1), config_z10)
            assert up == down


class TestMagnetizability:
    def test_ground_state_closed_form(self, config):
        g = gamma_kappa(-0.5, config)
        ref = -(2 * g + 1) * (8 * g * g + 4 * g - 1) / 64.0
        st = QuantumState.make(1, -0.5)
        assert magnetizability(st, config) == pytest.approx(ref, rel=1e-14)
        assert magnetizability_ground(config) == pytest.approx(ref, rel=1e-15)

    def test_nr0_family_consistency(self, config_z10):
        for st in [QuantumState.make(1, -0.5), QuantumState.make(2, -1.5),
                   QuantumState.make(3, -2.5)]:
            assert magnetizability_nr0(st, config_z10) == pytest.approx(
                magnetizability(st, config_z10), rel=1e-12)

    def test_nonrel_ground_state(self):
        tiny = PhysicsConfig(Z=1.0, alpha_scale=1e-5)
        assert magnetizability_ground(tiny) == pytest.approx(-3 / 32, rel=1e-9)

    def test_ground_state_sign_structure(self):
        # chi(1s) = -(1/64)(2g+1)(8g^2+4g-1) is diamagnetic while
        # gamma > (sqrt(3)-1)/4, i.e. alpha Z < sqrt(1/4 - ((sqrt(3)-1)/4)^2)
        # ~ 0.4656 (Z ~ 63.8 at the physical alpha); closer to the critical
        # charge the response turns paramagnetic
        st = QuantumState.make(1, -0.5)
        for z in (0.5, 1.0, 5.0, 20.0, 45.0, 60.0, 63.0):
            assert magnetizability(st, PhysicsConfig(Z=z)) < 0.0
        for z in (64.5, 66.0, 68.0):
            assert magnetizability(st, PhysicsConfig(Z=z)) > 0.0
        # the flip point in gamma
        g_flip = (math.sqrt(3.0) - 1.0) / 4.0
        assert 8 * g_flip ** 2 + 4 * g_flip - 1 == pytest.approx(0.0, abs=1e-15)

    def test_breakdown_assembly(self, config):
        st = QuantumState.make(1, -0.5)
        br = zeeman_breakdown(st, config)
        b = 2e-3
        e_au = br.energy_au(b, config, include_rest_mass=False)
        ref = (br.eps0 * config.Z ** 2 + br.eps1 * b
               + br.eps2 * b * b / config.Z ** 2)
        assert e_au == pytest.approx(ref, rel=1e-15)
        assert br.chi == -2.0 * br.eps2
