"""Re-derivation of the exponential-correction constants by constrained
minimax optimization.

The objective is the worst absolute relative error of the corrected formula
over a fit mesh — non-smooth but cheap, so the search is a zooming log-grid
scan followed by multi-start Nelder-Mead polish.  The two-exponential fit
eliminates C by substitution (C = K - A), so the flat-ellipse constraint
A + C = K holds exactly for every parameter vector ever evaluated.
"""

import json
import math
from dataclasses import dataclass
from enum import Enum
from itertools import product

import numpy as np
from scipy.optimize import minimize

from .approximations import (
    FLAT_LIMIT_DEFICIT,
    CorrectionParams,
    _LD,
    _g_ramanujan2,
    _h_of,
    _sigmoid_ld,
)
from .core import Formula, MethodId
from .error_analysis import (
    MeshSpec,
    VaryA,
    exact_perimeters,
    max_error,
    mesh_arrays,
)
from .oracle import DEFAULT_PRECISION, PrecisionConfig


class FitVariant(str, Enum):
    ONE_EXP = "one-exp"
    TWO_EXP_CONSTRAINED = "two-exp"


@dataclass(frozen=True)
class ParameterBounds:
    """Search intervals for the grid stage (amplitudes log-spaced, decays too)."""

    amplitude: tuple = (1e-6, 1e-2)
    decay: tuple = (1.0, 100.0)

    def __post_init__(self):
        for lo, hi in (self.amplitude, self.decay):
            if not (math.isfinite(lo) and math.isfinite(hi) and 0 < lo < hi):
                raise ValueError(f"bounds must be positive, finite, ordered; got {self!r}")


@dataclass(frozen=True)
class FitProblem:
    """What to fit, where to fit it, and where to report the result.

    ``fit_mesh`` drives the optimization (a coarser mesh keeps the search
    fast); ``achieved_max_rel`` in the result is re-evaluated on the denser
    ``eval_mesh``.  The two-exponential variant additionally folds
    ``secondary_mesh`` (the high-eccentricity band) and the analytic flat
    ellipse into the fit domain.
    """

    variant: FitVariant
    fit_mesh: MeshSpec
    eval_mesh: MeshSpec
    secondary_mesh: MeshSpec = None
    constraint_K: float = FLAT_LIMIT_DEFICIT
    bounds: ParameterBounds = ParameterBounds()
    seed: int = 0

    @classmethod
    def one_exp(cls, n_fit: int = 1000, n_eval: int = 10_000, seed: int = 0) -> "FitProblem":
        return cls(
            variant=FitVariant.ONE_EXP,
            fit_mesh=MeshSpec(VaryA(b_fixed=1.0, a_min=1.0, a_max=100.0), n_fit),
            eval_mesh=MeshSpec(VaryA(b_fixed=1.0, a_min=1.0, a_max=100.0), n_eval),
            seed=seed,
        )

    @classmethod
    def two_exp(
        cls,
        n_fit: int = 1000,
        n_eval: int = 10_000,
        seed: int = 0,
        constraint_K: float = FLAT_LIMIT_DEFICIT,
    ) -> "FitProblem":
        return cls(
            variant=FitVariant.TWO_EXP_CONSTRAINED,
            fit_mesh=MeshSpec(VaryA(b_fixed=1.0, a_min=1.0, a_max=100.0), n_fit),
            secondary_mesh=MeshSpec(VaryA(b_fixed=1.0, a_min=100.0, a_max=1000.0), n_fit),
            eval_mesh=MeshSpec(VaryA(b_fixed=1.0, a_min=1.0, a_max=1000.0), n_eval),
            constraint_K=constraint_K,
            seed=seed,
        )


@dataclass(frozen=True)
class FitResult:
    """Fitted constants plus the re-evaluated objective on the eval mesh."""

    params: CorrectionParams
    achieved_max_rel: float
    evaluations: int
    converged: bool


class _CorrectionObjective:
    """Max |relative error| of corrected Ramanujan II over fixed mesh points.

    The Ramanujan II base values, 1-h, and the sigmoid gate are precomputed;
    each call costs one or two vector exponentials.  Calls are counted for
    the fit report.
    """

    def __init__(self, meshes, oracle_cfg, include_flat_point, sigmoid_gain, sigmoid_center):
        a_parts, b_parts, p_parts = [], [], []
        for mesh in meshes:
            a, b = mesh_arrays(mesh)
            a_parts.append(a)
            b_parts.append(b)
            p_parts.append(exact_perimeters(mesh, oracle_cfg))
        if include_flat_point:
            # analytic anchor: the flat ellipse has perimeter exactly 4a
            a_parts.append(np.array([1.0]))
            b_parts.append(np.array([0.0]))
            p_parts.append(np.array([4.0]))
        a = np.concatenate(a_parts).astype(_LD)
        b = np.concatenate(b_parts).astype(_LD)
        self.p_exact = np.concatenate(p_parts)
        r = b / a
        self.h = _h_of(r)
        self.q = 1 - self.h
        gate = CorrectionParams(A=1.0, B=1.0, sigmoid_gain=sigmoid_gain, sigmoid_center=sigmoid_center)
        self.sigma = _sigmoid_ld(self.h, gate)
        self.r2_base = a * _g_ramanujan2(r)
        self.calls = 0

    def __call__(self, A, B, C=0.0, D=0.0) -> float:
        self.calls += 1
        if A < 0 or B <= 0 or C < 0 or (C > 0 and D <= 0):
            return math.inf
        corr = _LD(A) * np.exp(-_LD(B) * self.q)
        if C:
            corr = corr + _LD(C) * np.exp(-_LD(D) * self.q)
        corr = corr * self.sigma
        denom = 1 - corr
        if np.any(denom <= 0):
            return math.inf
        p_hat = np.asarray(self.r2_base / denom, dtype=np.float64)
        return float(np.max(np.abs(p_hat - self.p_exact) / self.p_exact))


def objective_phi(
    params: CorrectionParams,
    variant: FitVariant,
    mesh: MeshSpec,
    oracle_cfg: PrecisionConfig = DEFAULT_PRECISION,
) -> float:
    """Worst |relative error| of the corrected formula over one mesh.

    Returns +inf for parameter sets that drive the correction denominator to
    or below zero, which steers the optimizer away from them.
    """
    obj = _CorrectionObjective(
        [mesh], oracle_cfg, False, params.sigmoid_gain, params.sigmoid_center
    )
    if variant is FitVariant.ONE_EXP:
        return obj(params.A, params.B)
    return obj(params.A, params.B, params.C, params.D)


def _zoom_scan(f, spec, levels=3, per_dim=None):
    """Deterministic multilevel grid scan.

    ``spec`` is a list of (lo, hi, scale) per dimension with scale "log" or
    "linear".  Each level evaluates a full grid, then zooms the bounds to one
    grid step around the incumbent.  Returns all evaluated (value, point)
    pairs, best first.
    """
    if per_dim is None:
        per_dim = 15 if len(spec) == 2 else 10
    bounds = [(lo, hi) for lo, hi, _ in spec]
    scales = [s for _, _, s in spec]
    seen = []
    for _ in range(levels):
        grids = []
        for (lo, hi), scale in zip(bounds, scales):
            if scale == "log":
                grids.append(np.geomspace(lo, hi, per_dim))
            else:
                grids.append(np.linspace(lo, hi, per_dim))
        for point in product(*grids):
            seen.append((f(*point), point))
        best = min(seen, key=lambda t: t[0])[1]
        new_bounds = []
        for (lo, hi), scale, x in zip(bounds, scales, best):
            if scale == "log":
                step = (hi / lo) ** (1 / (per_dim - 1))
                new_bounds.append((x / step, x * step))
            else:
                step = (hi - lo) / (per_dim - 1)
                new_bounds.append((x - step, x + step))
        bounds = new_bounds
    seen.sort(key=lambda t: t[0])
    return seen


def _polish(obj_vec, starts, maxiter):
    """Multi-start Nelder-Mead in log-space; returns (best_x, converged)."""
    best_val, best_x, converged = math.inf, None, False
    for x0 in starts:
        res = minimize(
            obj_vec,
            np.log(x0),
            method="Nelder-Mead",
            options={"xatol": 1e-12, "fatol": 1e-15, "maxiter": maxiter, "maxfev": maxiter},
        )
        if res.fun < best_val:
            best_val, best_x, converged = res.fun, np.exp(res.x), bool(res.success)
    return best_x, converged


def fit_one_exp(
    problem: FitProblem,
    oracle_cfg: PrecisionConfig = DEFAULT_PRECISION,
    polish: bool = True,
) -> FitResult:
    """Fit (A, B) of the one-exponential correction by minimax.

    With ``polish=False`` the result is the best grid cell alone, which is
    useful for judging how much the simplex stage buys.
    """
    if problem.variant is not FitVariant.ONE_EXP:
        raise ValueError(f"problem variant must be {FitVariant.ONE_EXP}, got {problem.variant}")
    obj = _CorrectionObjective([problem.fit_mesh], oracle_cfg, False, 60.0, 0.33)
    (a_lo, a_hi), (d_lo, d_hi) = problem.bounds.amplitude, problem.bounds.decay
    scanned = _zoom_scan(obj, [(a_lo, a_hi, "log"), (d_lo, d_hi, "log")])
    if polish:
        starts = [p for _, p in scanned[:5]]
        rng = np.random.default_rng(problem.seed)
        for _ in range(3):
            starts.append(
                (
                    math.exp(rng.uniform(math.log(a_lo), math.log(a_hi))),
                    math.exp(rng.uniform(math.log(d_lo), math.log(d_hi))),
                )
            )
        x, converged = _polish(lambda x: obj(*np.exp(x)), starts, maxiter=4000)
        A, B = float(x[0]), float(x[1])
    else:
        A, B = map(float, scanned[0][1])
        converged = True
    params = CorrectionParams(A=A, B=B)
    cell = max_error(MethodId(Formula.R2_ONE_EXP), problem.eval_mesh, params, oracle_cfg)
    return FitResult(params, cell.max_abs_rel, obj.calls, converged)


def fit_two_exp(
    problem: FitProblem,
    oracle_cfg: PrecisionConfig = DEFAULT_PRECISION,
    polish: bool = True,
) -> FitResult:
    """Fit (A, B, D) with C = constraint_K - A eliminated by substitution.

    The fit domain is the union of the primary and secondary meshes plus the
    analytic flat-ellipse point.  The returned exponentials are ordered so
    the slower decay comes first (B <= D); the formula is symmetric under
    swapping the two terms.
    """
    if problem.variant is not FitVariant.TWO_EXP_CONSTRAINED:
        raise ValueError(
            f"problem variant must be {FitVariant.TWO_EXP_CONSTRAINED}, got {problem.variant}"
        )
    K = problem.constraint_K
    if not (math.isfinite(K) and K > 0):
        raise ValueError(f"constraint_K must be positive, got {K!r}")
    meshes = [problem.fit_mesh]
    if problem.secondary_mesh is not None:
        meshes.append(problem.secondary_mesh)
    obj = _CorrectionObjective(meshes, oracle_cfg, True, 60.0, 0.33)

    def constrained(A, B, D):
        if not 0 < A < K:
            return math.inf
        return obj(A, B, K - A, D)

    (d_lo, d_hi) = problem.bounds.decay
    scanned = _zoom_scan(
        constrained,
        [(0.02 * K, 0.98 * K, "linear"), (d_lo, d_hi, "log"), (d_lo, d_hi, "log")],
    )
    if polish:
        starts = [p for _, p in scanned[:5]]
        rng = np.random.default_rng(problem.seed)
        for _ in range(3):
            starts.append(
                (
                    K * rng.uniform(0.05, 0.95),
                    math.exp(rng.uniform(math.log(d_lo), math.log(d_hi))),
                    math.exp(rng.uniform(math.log(d_lo), math.log(d_hi))),
                )
            )
        x, converged = _polish(lambda x: constrained(*np.exp(x)), starts, maxiter=8000)
        A, B, D = map(float, x)
    else:
        (A, B, D), converged = map(float, scanned[0][1]), True
    C = K - A
    if B > D:
        A, B, C, D = C, D, A, B
    params = CorrectionParams(A=A, B=B, C=C, D=D, constraint_K=K)
    cell = max_error(MethodId(Formula.R2_TWO_EXP), problem.eval_mesh, params, oracle_cfg)
    return FitResult(params, cell.max_abs_rel, obj.calls, converged)


def write_fit_report(problem: FitProblem, result: FitResult, path) -> None:
    """JSON fit report: variant, constants, achieved ppm, search effort."""
    p = result.params
    report = {
        "variant": problem.variant.value,
        "params": {
            "A": p.A,
            "B": p.B,
            "C": p.C,
            "D": p.D,
            "constraint_K": p.constraint_K,
            "sigmoid_gain": p.sigmoid_gain,
            "sigmoid_center": p.sigmoid_center,
        },
        "achieved_max_rel_ppm": 1e6 * result.achieved_max_rel,
        "evaluations": result.evaluations,
        "converged": result.converged,
        "seed": problem.seed,
    }
    with open(path, "w") as f:
        json.dump(report, f, indent=2)
        f.write("\n")
