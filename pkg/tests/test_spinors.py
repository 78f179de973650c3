import math

import numpy as np
import pytest

from planardirac.errors import DomainError
from planardirac.spinors import (AxialSpinor, spinor_inner_product,
                                 verify_frame_identities, verify_operator_actions)

ALL_SPINORS = [AxialSpinor(tk, s * abs(tk))
               for tk in range(-7, 8, 2) for s in (+1, -1)]


class TestSpinorBasics:
    def test_pointwise_norm_and_single_component(self):
        phi = np.linspace(0.0, 2 * math.pi, 17)
        for sp in ALL_SPINORS:
            vals = sp.values(phi)
            assert np.allclose(np.sum(np.abs(vals) ** 2, axis=0),
                               1.0 / (2 * math.pi), atol=1e-15)
            live = int(np.any(np.abs(vals[0]) > 0)) + int(np.any(np.abs(vals[1]) > 0))
            assert live == 1

    def test_invalid_labels(self):
        with pytest.raises(DomainError):
            AxialSpinor(2, 2)
        with pytest.raises(DomainError):
            AxialSpinor(3, 1)


class TestInnerProducts:
    def test_orthonormality_matrix(self):
        for a in ALL_SPINORS:
            for b in ALL_SPINORS:
                ip = spinor_inner_product(a, b)
                expected = 1.0 if (a.two_kappa, a.two_m) == (b.two_kappa, b.two_m) \
                    else 0.0
                assert abs(ip - expected) < 1e-14

    def test_cosine_selection_rules(self):
        # <a|cos|b> = (1/2) delta_{m/k, m'/k'} (delta_{k,k'+1} + delta_{k,k'-1})
        for a in ALL_SPINORS:
            for b in ALL_SPINORS:
                got = spinor_inner_product(a, b, weight=np.cos)
                ra = a.two_m / a.two_kappa
                rb = b.two_m / b.two_kappa
                expected = 0.0
                if ra == rb and abs(a.two_kappa - b.two_kappa) == 2:
                    expected = 0.5
                assert abs(got - expected) < 1e-14

    def test_sine_selection_rules(self):
        for a in ALL_SPINORS:
            for b in ALL_SPINORS:
                got = spinor_inner_product(a, b, weight=np.sin)
                ra = a.two_m / a.two_kappa
                rb = b.two_m / b.two_kappa
                expected = 0.0
                if ra == rb and abs(a.two_kappa - b.two_kappa) == 2:
                    sign = math.copysign(1.0, a.two_m / a.two_kappa)
                    direction = 1.0 if a.two_kappa == b.two_kappa + 2 else -1.0
                    expected = sign * direction / 2j
                assert abs(got - expected) < 1e-14

    def test_undersampled_grid_rejected(self):
        a = AxialSpinor(7, 7)
        with pytest.raises(DomainError):
            spinor_inner_product(a, a, grid_size=8)


class TestOperatorIdentities:
    def test_full_suite_all_kappa(self):
        for sp in ALL_SPINORS:
            report = verify_operator_actions(sp.kappa, sp.m_kappa,
                                             grid_size=256, tolerance=1e-12)
            assert report.ok, report.failures()

    def test_sigma3_eigenvalue_example(self):
        # (kappa, m) = (-1/2, 1/2): sigma3 eigenvalue -m/kappa = +1
        report = verify_operator_actions(-0.5, 0.5)
        by_name = {c.identity: c for c in report.checks}
        assert by_name["sigma3-action"].passed
        sp = AxialSpinor(-1, 1)
        phi = np.array([0.3, 1.9])
        from planardirac.spinors import SIGMA3
        assert np.allclose(SIGMA3 @ sp.values(phi), +1.0 * sp.values(phi))

    def test_spin_orbit_eigenvalue_is_kappa(self):
        for sp in ALL_SPINORS:
            phi = np.linspace(0.1, 5.9, 7)
            from planardirac.spinors import SIGMA3
            lam = -1j * sp.dvalues(phi)
            k_op = -(SIGMA3 @ lam + 0.5 * sp.values(phi))
            assert np.allclose(k_op, sp.kappa * sp.values(phi), atol=1e-13)

    def test_cosine_expansion_coefficients(self):
        # cos(phi) Phi_{-1/2,1/2} = (1/2) Phi_{-3/2,3/2} + (1/2) Phi_{1/2,-1/2}
        phi = np.linspace(0.0, 2 * math.pi, 33)
        base = AxialSpinor(-1, 1)
        up = AxialSpinor(-3, 3)
        down = AxialSpinor(1, -1)
        lhs = np.cos(phi) * base.values(phi)
        rhs = 0.5 * up.values(phi) + 0.5 * down.values(phi)
        assert np.allclose(lhs, rhs, atol=1e-15)

    def test_failure_report_names_identity(self):
        # an impossible tolerance forces failures; the report must name the
        # violated identities (a frequency-2 spinor guarantees roundoff > 0)
        report = verify_operator_actions(1.5, 1.5, tolerance=0.0)
        bad = report.failures()
        assert bad
        assert all(c.identity for c in bad)
        with pytest.raises(DomainError) as err:
            report.raise_if_failed()
        assert bad[0].identity in str(err.value)

    def test_frame_identities(self):
        assert verify_frame_identities() <= 1e-15

    def test_suite_runtime_budget(self):
        import time
        start = time.time()
        for sp in ALL_SPINORS:
            verify_operator_actions(sp.kappa, sp.m_kappa, grid_size=256)
        assert time.time() - start < 1.0
