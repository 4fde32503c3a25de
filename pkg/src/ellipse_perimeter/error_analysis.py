"""Mesh construction, per-point error records, max-error extraction, and the
benchmark table over the three standard evaluation ranges.

Relative errors are kept as fractions internally; percent and ppm are
presentation-layer conversions (:func:`to_percent`, :func:`to_ppm`), applied
once, in the writers.
"""

import csv
import json
import math
from dataclasses import dataclass, replace
from functools import lru_cache
from typing import Iterable, Union

import numpy as np

from .approximations import CorrectionParams, array_evaluator
from .core import EllipseAxes, Formula, MethodId, h_param
from .oracle import DEFAULT_PRECISION, PrecisionConfig, exact_perimeter


@dataclass(frozen=True)
class VaryA:
    """Sweep the semi-major axis with the semi-minor axis fixed."""

    b_fixed: float
    a_min: float
    a_max: float


@dataclass(frozen=True)
class VaryB:
    """Sweep the semi-minor axis with the semi-major axis fixed."""

    a_fixed: float
    b_min: float
    b_max: float


MeshDomain = Union[VaryA, VaryB]


@dataclass(frozen=True)
class MeshSpec:
    """A uniformly spaced family of ellipses: point_i = lo + i*(hi-lo)/(n-1)."""

    domain: MeshDomain
    n_points: int

    def __post_init__(self):
        if not isinstance(self.n_points, int) or self.n_points < 2:
            raise ValueError(f"n_points must be an integer >= 2, got {self.n_points!r}")
        d = self.domain
        if isinstance(d, VaryA):
            fixed, lo, hi = d.b_fixed, d.a_min, d.a_max
        elif isinstance(d, VaryB):
            fixed, lo, hi = d.a_fixed, d.b_min, d.b_max
        else:
            raise TypeError(f"domain must be VaryA or VaryB, got {d!r}")
        if not all(map(math.isfinite, (fixed, lo, hi))):
            raise ValueError(f"mesh bounds must be finite, got {d!r}")
        if not lo < hi:
            raise ValueError(f"mesh range must satisfy min < max, got [{lo!r}, {hi!r}]")


@dataclass(frozen=True)
class ErrorRecord:
    """One mesh point: exact and approximate perimeter plus its relative error.

    ``signed_rel`` is ``(p_approx - p_exact) / p_exact`` as a fraction (not a
    percentage); ``abs_rel`` is its magnitude.
    """

    a: float
    b: float
    h: float
    p_exact: float
    p_approx: float
    signed_rel: float
    abs_rel: float


@dataclass(frozen=True)
class MaxErrorCell:
    """Worst absolute relative error of one method over one mesh."""

    method: MethodId
    mesh: MeshSpec
    max_abs_rel: float
    argmax_a: float
    argmax_b: float


# Table ranges: the h-domain sweep (a fixed at 1000) and the two b=1 sweeps,
# plus the wider figure range and the series-count range.
RANGE_PRESETS = {
    "h-domain": MeshSpec(VaryB(a_fixed=1000.0, b_min=1.0, b_max=1000.0), 10_000),
    "low-a": MeshSpec(VaryA(b_fixed=1.0, a_min=1.0001, a_max=100.0), 10_000),
    "high-a": MeshSpec(VaryA(b_fixed=1.0, a_min=100.0, a_max=1000.0), 10_000),
    "figure": MeshSpec(VaryA(b_fixed=1.0, a_min=1.0001, a_max=10_000.0), 10_000),
    "b1-a1-1000": MeshSpec(VaryA(b_fixed=1.0, a_min=1.0, a_max=1000.0), 10_000),
}

TABLE_RANGES = ("h-domain", "low-a", "high-a")

# Benchmark row order mirrors the historical progression.
BENCHMARK_METHODS = (
    MethodId(Formula.FAGNANO),
    MethodId(Formula.EULER),
    MethodId(Formula.RAMANUJAN_I),
    MethodId(Formula.RAMANUJAN_II),
    MethodId(Formula.CANTRELL),
    MethodId(Formula.KOSHY_2),
    MethodId(Formula.KOSHY_1),
    MethodId(Formula.R2_ONE_EXP),
    MethodId(Formula.R2_TWO_EXP),
)


def to_percent(fraction: float) -> float:
    return 100.0 * fraction


def to_ppm(fraction: float) -> float:
    return 1e6 * fraction


def mesh_arrays(spec: MeshSpec):
    """(a, b) float64 arrays of the mesh, normalized so a >= b elementwise."""
    d = spec.domain
    if isinstance(d, VaryA):
        varied = np.linspace(d.a_min, d.a_max, spec.n_points)
        fixed = np.full(spec.n_points, float(d.b_fixed))
        a, b = varied, fixed
    else:
        varied = np.linspace(d.b_min, d.b_max, spec.n_points)
        fixed = np.full(spec.n_points, float(d.a_fixed))
        a, b = fixed, varied
    return np.maximum(a, b), np.minimum(a, b)


def build_mesh(spec: MeshSpec) -> list:
    """The mesh as validated :class:`EllipseAxes`, in sweep order."""
    a, b = mesh_arrays(spec)
    return [EllipseAxes(float(ai), float(bi)) for ai, bi in zip(a, b)]


@lru_cache(maxsize=64)
def exact_perimeters(spec: MeshSpec, cfg: PrecisionConfig = DEFAULT_PRECISION) -> np.ndarray:
    """Oracle perimeters for a mesh, computed once and shared across methods."""
    out = np.array([exact_perimeter(ax, cfg) for ax in build_mesh(spec)])
    out.setflags(write=False)
    return out


def _rel_errors(method, mesh, params, cfg):
    a, b = mesh_arrays(mesh)
    p_exact = exact_perimeters(mesh, cfg)
    p_approx = array_evaluator(method, params)(a, b)
    signed = (p_approx - p_exact) / p_exact
    return a, b, p_exact, p_approx, signed


def error_curve(
    method: MethodId,
    mesh: MeshSpec,
    params: CorrectionParams = None,
    oracle_cfg: PrecisionConfig = DEFAULT_PRECISION,
) -> list:
    """Per-point :class:`ErrorRecord` list, in mesh order."""
    a, b, p_exact, p_approx, signed = _rel_errors(method, mesh, params, oracle_cfg)
    h = h_param(a, b)
    return [
        ErrorRecord(
            a=float(a[i]),
            b=float(b[i]),
            h=float(h[i]),
            p_exact=float(p_exact[i]),
            p_approx=float(p_approx[i]),
            signed_rel=float(signed[i]),
            abs_rel=abs(float(signed[i])),
        )
        for i in range(len(a))
    ]


def max_error(
    method: MethodId,
    mesh: MeshSpec,
    params: CorrectionParams = None,
    oracle_cfg: PrecisionConfig = DEFAULT_PRECISION,
) -> MaxErrorCell:
    """Worst |relative error| over the mesh; ties resolve to the lowest index."""
    a, b, _, _, signed = _rel_errors(method, mesh, params, oracle_cfg)
    abs_rel = np.abs(signed)
    i = int(np.argmax(abs_rel))
    return MaxErrorCell(
        method=method,
        mesh=mesh,
        max_abs_rel=float(abs_rel[i]),
        argmax_a=float(a[i]),
        argmax_b=float(b[i]),
    )


def benchmark_table(
    methods: Iterable[MethodId] = BENCHMARK_METHODS,
    ranges: Iterable[str] = TABLE_RANGES,
    params: CorrectionParams = None,
    oracle_cfg: PrecisionConfig = DEFAULT_PRECISION,
    n_points: int = None,
) -> dict:
    """Max-error cells for every (method, range) pair.

    Returns ``{method_label: {range_id: MaxErrorCell}}`` with deterministic
    insertion order.  ``n_points`` overrides the preset mesh density.
    """
    methods = list(methods)
    ranges = list(ranges)
    if not methods:
        raise ValueError("need at least one method")
    meshes = {}
    for rid in ranges:
        if rid not in RANGE_PRESETS:
            known = ", ".join(sorted(RANGE_PRESETS))
            raise ValueError(f"unknown range {rid!r}; expected one of: {known}")
        spec = RANGE_PRESETS[rid]
        meshes[rid] = spec if n_points is None else replace(spec, n_points=n_points)
    table = {}
    for method in methods:
        row = {}
        for rid in ranges:
            row[rid] = max_error(method, meshes[rid], params, oracle_cfg)
        table[method.label] = row
    return table


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------

CSV_HEADER = ["a", "b", "h", "p_exact", "p_approx", "signed_rel", "abs_rel"]


def _fmt(x: float) -> str:
    return format(x, ".17g")


def write_error_curve_csv(records: Iterable[ErrorRecord], path) -> None:
    """One row per mesh point, 17 significant digits (round-trips exactly)."""
    with open(path, "w", newline="") as f:
        _write_csv(records, f)


def _write_csv(records, f) -> None:
    w = csv.writer(f, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in records:
        w.writerow([_fmt(v) for v in (r.a, r.b, r.h, r.p_exact, r.p_approx, r.signed_rel, r.abs_rel)])


def read_error_curve_csv(path) -> list:
    """Inverse of :func:`write_error_curve_csv`."""
    with open(path, newline="") as f:
        rows = list(csv.reader(f))
    if not rows or rows[0] != CSV_HEADER:
        raise ValueError(f"{path}: expected header {','.join(CSV_HEADER)}")
    return [ErrorRecord(*map(float, row)) for row in rows[1:]]


def benchmark_rows(table: dict) -> list:
    """Flatten a benchmark table to JSON-ready row dicts."""
    rows = []
    for method_label, cells in table.items():
        for range_id, cell in cells.items():
            rows.append(
                {
                    "method": method_label,
                    "range_id": range_id,
                    "max_percent": to_percent(cell.max_abs_rel),
                    "max_ppm": to_ppm(cell.max_abs_rel),
                    "argmax_a": cell.argmax_a,
                    "argmax_b": cell.argmax_b,
                }
            )
    return rows


def write_benchmark_json(table: dict, path) -> None:
    with open(path, "w") as f:
        json.dump(benchmark_rows(table), f, indent=2)
        f.write("\n")


def format_benchmark_text(table: dict) -> str:
    """Aligned text table; ppm shown with two decimals."""
    ranges = list(next(iter(table.values())))
    name_w = max(len("method"), *(len(m) for m in table))
    cell_w = 26
    header = "method".ljust(name_w) + "".join(r.rjust(cell_w) for r in ranges)
    lines = [header, "-" * len(header)]
    for method_label, cells in table.items():
        line = method_label.ljust(name_w)
        for rid in ranges:
            cell = cells[rid]
            pct = to_percent(cell.max_abs_rel)
            ppm = to_ppm(cell.max_abs_rel)
            line += f"{pct:.7g}% / {ppm:.2f} ppm".rjust(cell_w)
        lines.append(line)
    return "\n".join(lines)
