"""Gauss-Kummer (Euler-Ivory) series for the perimeter:

    P = pi * (a + b) * sum_{n>=0} [binom(1/2, n)]^2 h^n,
    h = ((a - b) / (a + b))^2.

All terms are nonnegative, so partial sums increase monotonically toward the
exact perimeter; convergence slows as h -> 1.
"""

import numpy as np

from .core import EllipseAxes
from .oracle import DEFAULT_PRECISION, PrecisionConfig

_LD = np.longdouble
_PI = _LD("3.14159265358979323846264338327950288")

# Squared generalized binomial coefficients [binom(1/2, n)]^2, grown on
# demand via binom(1/2, n+1) = binom(1/2, n) * (1/2 - n) / (n + 1).  The
# recurrence keeps everything in [0, 1]; no factorials, no overflow.
_half_binom = [_LD(1)]

DEFAULT_TERM_CAP = 10_000


def coefficient_table(n_terms: int) -> np.ndarray:
    """First ``n_terms`` squared coefficients (longdouble, read-only).

    coeffs[0..3] are exactly 1, 1/4, 1/64, 1/256.
    """
    if n_terms < 1:
        raise ValueError(f"n_terms must be >= 1, got {n_terms!r}")
    while len(_half_binom) < n_terms:
        n = len(_half_binom) - 1
        _half_binom.append(_half_binom[-1] * (_LD(0.5) - n) / (n + 1))
    table = np.array(_half_binom[:n_terms], dtype=_LD)
    table = table * table
    table.setflags(write=False)
    return table


def series_coefficients(n_terms: int) -> np.ndarray:
    """Like :func:`coefficient_table` but rounded to float64."""
    return coefficient_table(n_terms).astype(np.float64)


def gauss_kummer_g(r, coeffs) -> np.ndarray:
    """Ratio-form partial sum ``pi * (1 + r) * sum c_n h^n`` (longdouble in/out)."""
    t = (1 - r) / (1 + r)
    h = t * t
    acc = np.full_like(np.asarray(h), coeffs[-1])
    for c in coeffs[-2::-1]:
        acc = acc * h + c
    return _PI * (1 + r) * acc


def ivory_partial_sum(axes: EllipseAxes, n_terms: int) -> float:
    """Partial sum over term indices 0 .. n_terms-1."""
    coeffs = coefficient_table(n_terms)
    r = _LD(axes.b) / _LD(axes.a)
    return float(gauss_kummer_g(r, coeffs) * _LD(axes.a))


def ivory_terms_needed(
    target_rel_err: float,
    mesh,
    oracle_cfg: PrecisionConfig = DEFAULT_PRECISION,
    cap: int = DEFAULT_TERM_CAP,
) -> int:
    """Smallest term count whose worst relative error over the mesh is within
    the target.

    The search adds one term at a time; evaluation is cheap and the expected
    counts are O(100).  Raises RuntimeError with the best error achieved if
    ``cap`` terms are not enough.
    """
    if not target_rel_err > 0:
        raise ValueError(f"target_rel_err must be positive, got {target_rel_err!r}")
    from . import error_analysis  # deferred: error_analysis imports approximations

    a, b = error_analysis.mesh_arrays(mesh)
    p_exact = error_analysis.exact_perimeters(mesh, oracle_cfg)

    a_l = a.astype(_LD)
    b_l = b.astype(_LD)
    t = (a_l - b_l) / (a_l + b_l)
    h = t * t
    scale = _PI * (a_l + b_l)

    coeff = _LD(1)  # binom(1/2, n) at the current index
    h_pow = np.ones_like(h)
    partial = scale.copy()
    n_terms = 1
    while True:
        rel = np.abs(np.asarray(partial, dtype=np.float64) - p_exact) / p_exact
        worst = float(rel.max())
        if worst <= target_rel_err:
            return n_terms
        if n_terms >= cap:
            raise RuntimeError(
                f"series did not reach {target_rel_err:g} within {cap} terms "
                f"(best max relative error {worst:g})"
            )
        n = n_terms - 1
        coeff = coeff * (_LD(0.5) - n) / (n + 1)
        h_pow = h_pow * h
        partial = partial + scale * (coeff * coeff) * h_pow
        n_terms += 1
