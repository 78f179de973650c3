"""Command-line front end.

Subcommands: levels | zeeman | tables | scan | validate.  Exit codes:
0 success, 1 validation failure, 2 usage or domain error.  Numeric output
uses 15 significant digits in scientific notation with explicit unit tags;
JSON output round-trips through the standard parser.
"""

from __future__ import annotations

import argparse
import json
import sys

from .coulomb import energy0, eps0_coefficient, radial_orbital
from .errors import PlanarDiracError
from .perturb import e1_coefficient, zeeman_breakdown
from .qnum import (B0_TESLA, PhysicsConfig, enumerate_states, gamma_kappa,
                   parse_state_label)
from .report_io import compute_golden_rows
from .tables import TABLE_ROWS, gamma_for
from .validation import SUITES, run_suite
from .variational import variational_binding_energy

__all__ = ["main"]


def _fmt(x: float) -> str:
    return f"{x:.15e}"


def _emit(text: str, out_path: str | None):
    if out_path:
        with open(out_path, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _csv(headers, rows) -> str:
    lines = [",".join(headers)]
    for row in rows:
        lines.append(",".join(row))
    return "\n".join(lines) + "\n"


def _config_from(args) -> PhysicsConfig:
    return PhysicsConfig(Z=args.Z, alpha_scale=args.alpha_scale)


def _add_config_flags(parser):
    parser.add_argument("--Z", type=float, default=1.0, help="nuclear charge number")
    parser.add_argument("--alpha-scale", dest="alpha_scale", type=float, default=1.0,
                        help="multiplier on the fine-structure constant")


def _add_output_flags(parser, formats=("json", "csv")):
    parser.add_argument("--format", choices=formats, default=formats[0])
    parser.add_argument("--out", default=None, help="write output to this path")


def cmd_levels(args) -> int:
    config = _config_from(args)
    rows = []
    seen = set()
    for state in enumerate_states(args.n_max):
        key = (state.n, state.two_kappa)
        if key in seen:
            continue
        seen.add(key)
        rows.append({
            "label": state.label,
            "n": state.n,
            "two_kappa": state.two_kappa,
            "n_r": state.n_r,
            "gamma": gamma_kappa(state.kappa, config),
            "big_n": radial_orbital(state, config).big_n,
            "E0": {"value": energy0(state, config), "units": "mc2"},
            "eps0": eps0_coefficient(state, config),
        })
    if args.format == "json":
        _emit(json.dumps(rows, indent=2) + "\n", args.out)
    else:
        headers = ["label", "n", "two_kappa", "n_r", "gamma", "big_n",
                   "E0_over_mc2", "eps0"]
        body = [[r["label"], str(r["n"]), str(r["two_kappa"]), str(r["n_r"]),
                 _fmt(r["gamma"]), _fmt(r["big_n"]), _fmt(r["E0"]["value"]),
                 _fmt(r["eps0"])] for r in rows]
        _emit(_csv(headers, body), args.out)
    return 0


def cmd_zeeman(args) -> int:
    config = _config_from(args)
    state = parse_state_label(args.state)
    b = args.b_over_b0
    records = []
    for sign in (+1, -1):
        st = state.with_m_sign(sign)
        br = zeeman_breakdown(st, config)
        records.append({
            "state": {"n": st.n, "two_kappa": st.two_kappa,
                      "two_m_kappa": st.two_m_kappa, "label": st.label},
            "coefficients": {"eps0": br.eps0, "eps1": br.eps1, "eps2": br.eps2},
            "assembled": {"E_over_mc2": br.energy_over_mc2(b, config)},
            "chi": {"value": br.chi, "units": "alpha2_a0_3_over_Z2"},
            "field": {"b_over_b0": b, "units": "B0", "B0_tesla": B0_TESLA},
        })
    if args.format == "json":
        _emit(json.dumps(records, indent=2) + "\n", args.out)
    else:
        headers = ["label", "n", "two_kappa", "two_m_kappa", "eps0", "eps1", "eps2",
                   "E_over_mc2", "chi_value", "chi_units", "b_over_b0", "B0_tesla"]
        body = [[r["state"]["label"], str(r["state"]["n"]),
                 str(r["state"]["two_kappa"]), str(r["state"]["two_m_kappa"]),
                 _fmt(r["coefficients"]["eps0"]), _fmt(r["coefficients"]["eps1"]),
                 _fmt(r["coefficients"]["eps2"]), _fmt(r["assembled"]["E_over_mc2"]),
                 _fmt(r["chi"]["value"]), r["chi"]["units"],
                 _fmt(b), _fmt(B0_TESLA)] for r in records]
        _emit(_csv(headers, body), args.out)
    return 0


def cmd_tables(args) -> int:
    config = _config_from(args)
    rows = compute_golden_rows(args.Z, args.alpha_scale)
    lines = [f"coefficient tables at alpha*Z = {_fmt(config.coupling)}"]
    worst = 0.0
    for table_row, computed in zip(TABLE_ROWS, sorted(rows, key=lambda r: (
            [t.label for t in TABLE_ROWS].index(r["label"])))):
        g = gamma_for(table_row, config)
        az = config.coupling
        ref = {"eps0": table_row.eps0_exact(az, g),
               "eps1": table_row.eps1_exact(g),
               "eps2": table_row.eps2_exact(g)}
        for name in ("eps0", "eps1", "eps2"):
            got = computed[f"{name}_exact"]
            dev = abs(got - ref[name]) / max(abs(ref[name]), 1e-300)
            worst = max(worst, dev)
            lines.append(f"{table_row.label:9s} {name}: computed {_fmt(got)} "
                         f"formula {_fmt(ref[name])} rel-dev {dev:.2e}")
        nonrel = {"eps0": float(table_row.eps0_nonrel),
                  "eps1": float(table_row.eps1_nonrel),
                  "eps2": float(table_row.eps2_nonrel)}
        lines.append(f"{table_row.label:9s} nonrel columns: "
                     + " ".join(f"{k}={_fmt(v)}" for k, v in nonrel.items()))
    ok = worst <= args.rel_tol
    lines.append(f"worst relative deviation: {worst:.3e} "
                 f"({'OK' if ok else 'EXCEEDS'} tolerance {args.rel_tol:.1e})")
    _emit("\n".join(lines) + "\n", args.out)
    return 0 if ok else 1


def cmd_scan(args) -> int:
    config = _config_from(args)
    state = parse_state_label(args.state)
    if args.b_min <= 0 or args.b_max <= args.b_min or args.points < 2:
        raise PlanarDiracError("need 0 < b-min < b-max and points >= 2")
    br = zeeman_breakdown(state, config)
    z = config.Z
    bs = [args.b_min + (args.b_max - args.b_min) * i / (args.points - 1)
          for i in range(args.points)]
    headers = ["b_over_b0", "E_pert_binding_au", "E_pert_over_mc2"]
    if args.with_variational:
        headers += ["E_var_binding_au", "residual_au"]
    body = []
    for b in bs:
        e_binding = br.eps0 * z * z + br.eps1 * b + br.eps2 * b * b / (z * z)
        row = [_fmt(b), _fmt(e_binding), _fmt(1.0 + e_binding / config.mc2)]
        if args.with_variational:
            e_var = variational_binding_energy(state, config, b,
                                               basis_size=args.basis_size)
            row += [_fmt(e_var), _fmt(e_var - e_binding)]
        body.append(row)
    _emit(_csv(headers, body), args.out)
    return 0


def cmd_validate(args) -> int:
    try:
        results = run_suite(args.suite)
    except KeyError:
        raise PlanarDiracError(
            f"unknown suite {args.suite!r}; choose from "
            f"{', '.join(list(SUITES) + ['all'])}")
    lines = []
    failures = 0
    for r in results:
        mark = "PASS" if r.ok else "FAIL"
        failures += 0 if r.ok else 1
        detail = f" -- {r.detail}" if r.detail else ""
        lines.append(f"{mark} [{r.suite}] {r.name}{detail}")
    lines.append(f"{len(results) - failures}/{len(results)} checks passed")
    _emit("\n".join(lines) + "\n", args.out)
    return 0 if failures == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="planardirac",
        description="Zeeman structure of the relativistic planar hydrogen-like atom")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("levels", help="field-free level table")
    _add_config_flags(p)
    p.add_argument("--n-max", dest="n_max", type=int, default=3)
    _add_output_flags(p)
    p.set_defaults(func=cmd_levels)

    p = sub.add_parser("zeeman", help="Zeeman coefficients and assembled energy")
    _add_config_flags(p)
    p.add_argument("--state", required=True,
                   help="state label like 2p3/2, or an n,2kappa pair like 2,-3")
    p.add_argument("--b-over-b0", dest="b_over_b0", type=float, default=0.0)
    _add_output_flags(p)
    p.set_defaults(func=cmd_zeeman)

    p = sub.add_parser("tables", help="computed-vs-formula coefficient tables")
    _add_config_flags(p)
    p.add_argument("--rel-tol", dest="rel_tol", type=float, default=1e-12)
    _add_output_flags(p, formats=("text",))
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("scan", help="CSV scan of E(B) over a field range")
    _add_config_flags(p)
    p.add_argument("--state", required=True)
    p.add_argument("--b-min", dest="b_min", type=float, required=True)
    p.add_argument("--b-max", dest="b_max", type=float, required=True)
    p.add_argument("--points", type=int, default=5)
    p.add_argument("--with-variational", dest="with_variational", action="store_true")
    p.add_argument("--basis-size", dest="basis_size", type=int, default=30)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("validate", help="run invariant suites")
    p.add_argument("--suite", default="all",
                   help="one of: " + ", ".join(list(SUITES) + ["all"]))
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_validate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except PlanarDiracError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
