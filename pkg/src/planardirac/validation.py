"""Self-contained invariant suites, runnable from the command line.

Each suite returns a list of :class:`CheckResult`; the CLI turns failures
into a nonzero exit code.  These are quick smoke versions of the full pytest
suite, meant for field diagnostics of an installed package.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import coulomb, limits, perturb, qnum, specfun, spinors, sturmian, variational

__all__ = ["CheckResult", "SUITES", "run_suite"]


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    ok: bool
    detail: str


def _result(suite, name, ok, detail=""):
    return CheckResult(suite=suite, name=name, ok=bool(ok), detail=detail)


def _channels(n_max):
    seen = set()
    out = []
    for st in qnum.enumerate_states(n_max):
        key = (st.n, st.two_kappa)
        if key in seen:
            continue
        seen.add(key)
        out.append(st.with_m_sign(+1))
    return out


def suite_quadrature() -> list[CheckResult]:
    out = []
    # zeroth and third moments against Gamma ratios
    for a in (0.0, 0.9134, 2.7):
        rule = specfun.gauss_generalized_laguerre(24, a)
        m0 = float(np.sum(rule.weights))
        m3 = float(np.dot(rule.weights, rule.nodes ** 3))
        ref0 = math.exp(specfun.log_gamma(a + 1.0))
        ref3 = math.exp(specfun.log_gamma(a + 4.0))
        out.append(_result("quadrature", f"moment0 a={a}", abs(m0 - ref0) <= 1e-12 * ref0,
                           f"{m0!r} vs {ref0!r}"))
        out.append(_result("quadrature", f"moment3 a={a}", abs(m3 - ref3) <= 1e-12 * ref3,
                           f"{m3!r} vs {ref3!r}"))
    # closed-form product integral vs quadrature
    worst = 0.0
    for n in range(0, 6):
        for npr in range(0, 6):
            for alpha, gamma in ((0.5, 0.5), (0.5, 1.5), (-0.3, 1.7)):
                closed = specfun.laguerre_integral_identity(n, npr, alpha, alpha, gamma)
                rule = specfun.gauss_generalized_laguerre(max(24, n + npr + 8), gamma)
                quad = float(np.dot(rule.weights,
                                    specfun.laguerre(n, alpha, rule.nodes)
                                    * specfun.laguerre(npr, alpha, rule.nodes)))
                scale = max(1.0, abs(closed))
                worst = max(worst, abs(quad - closed) / scale)
    out.append(_result("quadrature", "product-integral vs quadrature", worst < 1e-10,
                       f"worst rel {worst:.3e}"))
    return out


def suite_coulomb() -> list[CheckResult]:
    out = []
    config = qnum.PhysicsConfig(Z=1.0)
    worst_norm = 0.0
    for st in _channels(4):
        orb = coulomb.radial_orbital(st, config)
        worst_norm = max(worst_norm, abs(orb.norm_integral() - 1.0))
    out.append(_result("coulomb", "normalization n<=4", worst_norm < 1e-10,
                       f"worst |norm-1| {worst_norm:.3e}"))
    worst_ov = 0.0
    for two_kappa in (-1, 1, -3):
        orbs = [coulomb.radial_orbital(qnum.QuantumState(n, two_kappa, abs(two_kappa)), config)
                for n in range(max(1, (abs(two_kappa) + 1) // 2 + (two_kappa > 0)),
                               5) if 2 * n - abs(two_kappa) - 1 >= 2 * (two_kappa > 0)]
        for i in range(len(orbs)):
            for j in range(i + 1, len(orbs)):
                ov = (specfun.integrate_radial_product([orbs[i].P, orbs[j].P])
                      + specfun.integrate_radial_product([orbs[i].Q, orbs[j].Q]))
                worst_ov = max(worst_ov, abs(ov))
    out.append(_result("coulomb", "same-channel orthogonality", worst_ov < 1e-9,
                       f"worst overlap {worst_ov:.3e}"))
    worst_mono = True
    for two_kappa in (-1, 1, -3):
        prev = None
        for n in range(1, 6):
            try:
                st = qnum.QuantumState(n, two_kappa, abs(two_kappa))
            except Exception:
                continue
            e = coulomb.energy0(st, config)
            if prev is not None and e <= prev:
                worst_mono = False
            prev = e
    out.append(_result("coulomb", "energy monotonic in n_r", worst_mono))
    return out


def suite_sturmian() -> list[CheckResult]:
    out = []
    config = qnum.PhysicsConfig(Z=1.0)
    st = qnum.QuantumState.make(2, -0.5)
    # squared sign-convention identity
    g = qnum.gamma_kappa(st.kappa, config)
    worst = 0.0
    for n_prime in range(-6, 7):
        cap = sturmian.big_n_signed(n_prime, st.kappa, config)
        target = n_prime ** 2 + 2 * abs(n_prime) * g + st.kappa ** 2
        worst = max(worst, abs(cap * cap - target) / target)
    out.append(_result("sturmian", "signed-N square identity", worst < 1e-13,
                       f"worst rel {worst:.3e}"))
    # Gram matrices of both orthogonality relations on |n'| <= 5
    pairs = [sturmian.sturmian_pair_at_bound(n_prime, st, config)
             for n_prime in range(-5, 6)]
    orb = coulomb.radial_orbital(st, config)
    eps = config.coupling / (st.n_r + g + orb.big_n)
    chk = config.Z / (config.alpha_eff * orb.big_n)   # c*hbar*k at the bound energy
    worst_a = worst_b = 0.0
    for i, pi in enumerate(pairs):
        for j, pj in enumerate(pairs):
            gram_a = config.Z * (pi.mu * specfun.integrate_radial_product([pi.S, pj.S], r_power=-1)
                                 - (1.0 / pj.mu) * specfun.integrate_radial_product([pi.T, pj.T], r_power=-1))
            gram_b = chk * (eps * specfun.integrate_radial_product([pi.S, pj.S])
                            + (1.0 / eps) * specfun.integrate_radial_product([pi.T, pj.T]))
            target = 1.0 if i == j else 0.0
            worst_a = max(worst_a, abs(gram_a - target))
            worst_b = max(worst_b, abs(gram_b - target))
    out.append(_result("sturmian", "potential-weighted orthogonality", worst_a < 1e-9,
                       f"worst dev {worst_a:.3e}"))
    out.append(_result("sturmian", "energy-weighted orthogonality", worst_b < 1e-9,
                       f"worst dev {worst_b:.3e}"))
    # J - I = S pointwise
    i_fn, j_fn, _ = sturmian.ijk_functions(st, config)
    pair = sturmian.sturmian_pair_at_bound(st.n_r, st, config)
    r = np.linspace(0.2, 25.0, 40)
    dev = np.max(np.abs((j_fn(r) - i_fn(r)) - pair.S(r)) / np.max(np.abs(pair.S(r))))
    out.append(_result("sturmian", "J - I = S pointwise", dev < 1e-10, f"max rel {dev:.3e}"))
    return out


def suite_perturb() -> list[CheckResult]:
    out = []
    worst = 0.0
    for z in (1.0, 40.0):
        config = qnum.PhysicsConfig(Z=z)
        for st in _channels(3):
            closed = perturb.e2_coefficient(st, config)
            assembled = perturb.e2_assembled(st, config)
            worst = max(worst, abs(assembled - closed) / abs(closed))
    out.append(_result("perturb", "two-path second-order equality", worst < 1e-9,
                       f"worst rel {worst:.3e}"))
    config = qnum.PhysicsConfig(Z=1.0)
    worst1 = 0.0
    for st in _channels(4):
        a = perturb.e1_coefficient(st, config)
        b = perturb.e1_via_quadrature(st, config)
        worst1 = max(worst1, abs(a - b) / max(abs(a), 1e-3))
    out.append(_result("perturb", "first-order closed vs quadrature", worst1 < 1e-10,
                       f"worst rel {worst1:.3e}"))
    st = qnum.QuantumState.make(2, -1.5)
    anti = (perturb.e1_coefficient(st.with_m_sign(+1), config)
            + perturb.e1_coefficient(st.with_m_sign(-1), config))
    out.append(_result("perturb", "first-order antisymmetry in m", anti == 0.0))
    chi = perturb.magnetizability(qnum.QuantumState.make(1, -0.5), config)
    out.append(_result("perturb", "ground state diamagnetic", chi < 0.0, f"chi {chi:.6f}"))
    return out


def suite_limits() -> list[CheckResult]:
    out = []
    worst = 0.0
    for st in _channels(3):
        def f_eps2(t, st=st):
            return perturb.e2_coefficient(st, qnum.PhysicsConfig(Z=1.0, alpha_scale=t))
        extrap = limits.richardson_alpha_limit(f_eps2, 1e-4)
        ref = limits.nonrel_eps2(st)
        worst = max(worst, abs(extrap - ref) / abs(ref))
    out.append(_result("limits", "nonrelativistic eps2 limit", worst < 1e-8,
                       f"worst rel {worst:.3e}"))
    ok = True
    for st in _channels(3):
        a = limits.nonrel_eps2(st)
        b = limits.nonrel_eps2_l_form(st.n, st.l)
        if a != b:
            ok = False
    out.append(_result("limits", "kappa-form equals l-form", ok))
    worst_ratio = (0.0, 1e9)
    for st in _channels(3):
        for az in (0.2, 0.1):
            z_for = lambda t: qnum.PhysicsConfig(Z=1.0, alpha=t)
            exact_hi = coulomb.eps0_coefficient(st, z_for(az))
            exact_lo = coulomb.eps0_coefficient(st, z_for(az / 2))
            series_hi = limits.quasirel_eps0(st, z_for(az))
            series_lo = limits.quasirel_eps0(st, z_for(az / 2))
            ratio = abs(exact_hi - series_hi) / abs(exact_lo - series_lo)
            worst_ratio = (max(worst_ratio[0], ratio), min(worst_ratio[1], ratio))
    ok = worst_ratio[0] <= 19.0 and worst_ratio[1] >= 13.0
    out.append(_result("limits", "quartic residual scaling", ok,
                       f"ratios within [{worst_ratio[1]:.2f}, {worst_ratio[0]:.2f}]"))
    return out


def suite_spinors() -> list[CheckResult]:
    out = []
    worst = 0.0
    all_ok = True
    for two_kappa in range(-7, 8, 2):
        for sign in (+1, -1):
            rep = spinors.verify_operator_actions(two_kappa / 2.0,
                                                  sign * abs(two_kappa) / 2.0)
            all_ok = all_ok and rep.ok
            worst = max(worst, max(c.max_error for c in rep.checks))
    out.append(_result("spinors", "operator identities |kappa|<=7/2", all_ok,
                       f"worst error {worst:.3e}"))
    frame = spinors.verify_frame_identities()
    out.append(_result("spinors", "polar frame identities", frame <= 1e-15,
                       f"max dev {frame:.1e}"))
    return out


def suite_variational() -> list[CheckResult]:
    out = []
    config = qnum.PhysicsConfig(Z=1.0)
    st = qnum.QuantumState.make(1, -0.5)
    problem = variational.build_channel_matrices(st, 20, 0.0, config)
    pairs = variational.solve_generalized_symmetric(problem)
    ref = variational.eps0_binding_au(st, config)
    best = min(abs(ev - ref) for ev, _ in pairs) / abs(ref)
    out.append(_result("variational", "field-free eigenvalue", best < 1e-8,
                       f"rel dev {best:.3e}"))
    h = problem.hamiltonian_matrix
    out.append(_result("variational", "exact symmetry",
                       bool(np.array_equal(h, h.T))))
    doubled_exact = np.array_equal(2.0 * (1e-3 * problem.zeeman_matrix),
                                   2e-3 * problem.zeeman_matrix)
    out.append(_result("variational", "field block linear in B", doubled_exact))
    # second-order coefficient recovered from the discretized problem
    eps1_m, eps2_m = variational.matrix_perturbation_coefficients(st, config, basis_size=20)
    d1 = abs(eps1_m - perturb.e1_coefficient(st, config))
    d2 = abs(eps2_m - perturb.e2_coefficient(st, config) / config.Z ** 2)
    out.append(_result("variational", "matrix perturbation theory orders 1-2",
                       d1 < 1e-10 and d2 < 1e-10, f"dev1 {d1:.2e} dev2 {d2:.2e}"))
    return out


SUITES = {
    "quadrature": suite_quadrature,
    "coulomb": suite_coulomb,
    "sturmian": suite_sturmian,
    "perturb": suite_perturb,
    "limits": suite_limits,
    "spinors": suite_spinors,
    "variational": suite_variational,
}


def run_suite(name: str) -> list[CheckResult]:
    if name == "all":
        results = []
        for suite_name in SUITES:
            results.extend(SUITES[suite_name]())
        return results
    if name not in SUITES:
        raise KeyError(name)
    return SUITES[name]()
