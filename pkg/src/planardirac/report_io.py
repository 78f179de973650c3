"""Canonical text snapshots of the coefficient tables, for regression diffs.

Snapshot format: one header line ``planardirac-golden v1 Z=<...> alpha_scale=<...>``
followed by a CSV body with a fixed column schema, rows sorted by (n, 2kappa),
every float printed with 15 significant digits in scientific notation.  The
bytes are deterministic across runs and platforms for identical inputs.

``alpha_scale = 0`` is accepted by the writer as the exact nonrelativistic
point: the cells are then filled from the closed limit formulas instead of
evaluating the relativistic expressions at zero coupling (which is outside
the physical domain).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path

from .coulomb import eps0_coefficient
from .errors import DomainError
from .limits import nonrel_eps0, nonrel_eps1, nonrel_eps2
from .perturb import e1_coefficient, e2_coefficient
from .qnum import PhysicsConfig
from .tables import TABLE_ROWS, gamma_for

__all__ = ["GoldenDiff", "compare_golden", "compute_golden_rows", "write_golden"]

_SCHEMA = "planardirac-golden v1"
_COLUMNS = ("label", "n", "two_kappa", "eps0_exact", "eps0_nonrel",
            "eps1_exact", "eps1_nonrel", "eps2_exact", "eps2_nonrel")


def _fmt(x: float) -> str:
    return f"{x:.15e}"


def compute_golden_rows(Z: float, alpha_scale: float) -> list[dict]:
    """Coefficient cells for the nine tabulated states at (Z, alpha_scale).

    ``eps*_exact`` columns come from the general formulas; ``eps*_nonrel``
    from the closed limits.  eps1 cells are the coefficients of sgn(m_kappa).
    """
    rows = []
    if alpha_scale == 0.0:
        config = None
    else:
        config = PhysicsConfig(Z=Z, alpha_scale=alpha_scale)
    for row in TABLE_ROWS:
        state = row.state
        if config is None:
            e0 = nonrel_eps0(state)
            e1 = nonrel_eps1(state)
            e2 = nonrel_eps2(state)
        else:
            e0 = eps0_coefficient(state, config)
            e1 = e1_coefficient(state, config)
            e2 = e2_coefficient(state, config)
        rows.append({
            "label": row.label,
            "n": state.n,
            "two_kappa": state.two_kappa,
            "eps0_exact": e0,
            "eps0_nonrel": float(row.eps0_nonrel),
            "eps1_exact": e1,
            "eps1_nonrel": float(row.eps1_nonrel),
            "eps2_exact": e2,
            "eps2_nonrel": float(row.eps2_nonrel),
        })
    rows.sort(key=lambda r: (r["n"], r["two_kappa"]))
    return rows


def write_golden(path, Z: float, alpha_scale: float = 1.0,
                 rows: list[dict] | None = None) -> Path:
    """Write the canonical snapshot; returns the path written."""
    path = Path(path)
    if rows is None:
        rows = compute_golden_rows(Z, alpha_scale)
    lines = [f"{_SCHEMA} Z={_fmt(Z)} alpha_scale={_fmt(alpha_scale)}"]
    lines.append(",".join(_COLUMNS))
    for r in rows:
        cells = [str(r["label"]), str(r["n"]), str(r["two_kappa"])]
        cells += [_fmt(r[c]) for c in _COLUMNS[3:]]
        lines.append(",".join(cells))
    text = "\n".join(lines) + "\n"
    try:
        path.write_text(text, encoding="ascii")
    except OSError as exc:
        raise OSError(f"cannot write golden snapshot to {path}: {exc}") from exc
    return path


def _parse(path: Path) -> tuple[str, list[dict]]:
    try:
        lines = path.read_text(encoding="ascii").splitlines()
    except OSError as exc:
        raise OSError(f"cannot read golden snapshot {path}: {exc}") from exc
    if not lines or not lines[0].startswith(_SCHEMA):
        raise DomainError(f"{path}: missing or unknown schema header")
    if len(lines) < 2 or lines[1] != ",".join(_COLUMNS):
        raise DomainError(f"{path}: column schema mismatch")
    rows = []
    for ln in lines[2:]:
        if not ln:
            continue
        cells = ln.split(",")
        if len(cells) != len(_COLUMNS):
            raise DomainError(f"{path}: malformed row {ln!r}")
        row = {"label": cells[0], "n": int(cells[1]), "two_kappa": int(cells[2])}
        for name, cell in zip(_COLUMNS[3:], cells[3:]):
            row[name] = float(cell)
        rows.append(row)
    return lines[0], rows


@dataclass(frozen=True)
class GoldenDiff:
    """Result of comparing two snapshots cell by cell."""
    header_a: str
    header_b: str
    violations: tuple[tuple[str, str, float, float], ...]  # (label, column, a, b)

    @property
    def ok(self) -> bool:
        return not self.violations


def compare_golden(path_a, path_b, rel_tol: float = 1e-12) -> GoldenDiff:
    """Relative per-cell comparison; lists every violation beyond rel_tol."""
    header_a, rows_a = _parse(Path(path_a))
    header_b, rows_b = _parse(Path(path_b))
    by_label_b = {r["label"]: r for r in rows_b}
    if {r["label"] for r in rows_a} != set(by_label_b):
        raise DomainError("snapshots tabulate different state sets")
    violations = []
    for ra in rows_a:
        rb = by_label_b[ra["label"]]
        for col in _COLUMNS[3:]:
            a, b = ra[col], rb[col]
            denom = max(abs(a), abs(b))
            if denom == 0.0:
                continue
            if not math.isfinite(a) or not math.isfinite(b) or abs(a - b) > rel_tol * denom:
                violations.append((ra["label"], col, a, b))
    return GoldenDiff(header_a=header_a, header_b=header_b,
                      violations=tuple(violations))
