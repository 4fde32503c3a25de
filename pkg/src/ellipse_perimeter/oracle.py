"""High-precision reference values: the complete elliptic integral of the
second kind via AGM iteration, and the exact ellipse perimeter ``4a E(m)``.

Convention note: ``elliptic_E`` takes the elliptic *parameter* ``m = e**2``
(the square of the eccentricity), i.e. ``E(m) = integral_0^{pi/2}
sqrt(1 - m sin^2 t) dt``.  Callers holding an eccentricity must square it.

Results are computed in configurable extended precision (mpmath) and rounded
to double width at the public API boundary; the ``*_mp`` variants return the
unrounded values for golden-file generation.
"""

from dataclasses import dataclass

from mpmath import mpf, mp, workdps

from .core import EllipseAxes

_MAX_AGM_ITERATIONS = 1000


@dataclass(frozen=True)
class PrecisionConfig:
    """Working precision of the reference computation.

    ``working_digits`` is the number of decimal significant digits carried
    internally (>= 30).  ``tolerance`` is the relative AGM convergence
    threshold; it defaults to ``10**-(working_digits - 5)`` and may not be
    looser than that.
    """

    working_digits: int = 50
    tolerance: float = None  # type: ignore[assignment]  # resolved in __post_init__

    def __post_init__(self):
        if not isinstance(self.working_digits, int) or self.working_digits < 30:
            raise ValueError(f"working_digits must be an integer >= 30, got {self.working_digits!r}")
        cap = 10.0 ** -(self.working_digits - 5)
        if self.tolerance is None:
            object.__setattr__(self, "tolerance", cap)
        elif not 0.0 < self.tolerance <= cap:
            raise ValueError(
                f"tolerance must be in (0, {cap:g}] for {self.working_digits} digits, "
                f"got {self.tolerance!r}"
            )


DEFAULT_PRECISION = PrecisionConfig()


def elliptic_E_mp(m, cfg: PrecisionConfig = DEFAULT_PRECISION):
    """E(m) as an mpmath float at the configured precision.

    AGM iteration: a0 = 1, g0 = sqrt(1 - m), c0 = sqrt(m);
    a_{n+1} = (a_n + g_n)/2, g_{n+1} = sqrt(a_n g_n), c_{n+1} = (a_n - g_n)/2
    until |c_n| < tolerance * a_n; then K = pi / (2 a_N) and
    E = K * (1 - sum_{n=0}^{N} 2**(n-1) c_n**2).

    m = 1 is returned analytically as 1 (the iteration would stall on
    sqrt(0)); m = 0 returns pi/2.
    """
    with workdps(cfg.working_digits):
        m = mpf(m)
        if not 0 <= m <= 1:
            raise ValueError(f"elliptic parameter must lie in [0, 1], got {m}")
        if m == 1:
            return mpf(1)
        if m == 0:
            return +(mp.pi / 2)
        tol = mpf(cfg.tolerance)
        a, g, c = mpf(1), mp.sqrt(1 - m), mp.sqrt(m)
        c_sum = c * c / 2  # 2**(-1) * c_0**2
        weight = mpf(1)    # 2**(n-1) at the current index
        for _ in range(_MAX_AGM_ITERATIONS):
            if abs(c) < tol * a:
                break
            a, g, c = (a + g) / 2, mp.sqrt(a * g), (a - g) / 2
            c_sum += weight * c * c
            weight *= 2
        else:
            raise RuntimeError(f"AGM failed to converge for m = {m}")
        return +((mp.pi / (2 * a)) * (1 - c_sum))


def elliptic_E(m, cfg: PrecisionConfig = DEFAULT_PRECISION) -> float:
    """E(m) rounded to double precision; relative error <= 1e-25 before rounding."""
    return float(elliptic_E_mp(m, cfg))


def exact_perimeter_mp(axes: EllipseAxes, cfg: PrecisionConfig = DEFAULT_PRECISION):
    """Exact perimeter ``4 a E(m)`` as an mpmath float."""
    with workdps(cfg.working_digits):
        a, b = mpf(axes.a), mpf(axes.b)
        r = b / a
        m = 1 - r * r
        return +(4 * a * elliptic_E_mp(m, cfg))


def exact_perimeter(axes: EllipseAxes, cfg: PrecisionConfig = DEFAULT_PRECISION) -> float:
    """Exact perimeter rounded to double precision."""
    return float(exact_perimeter_mp(axes, cfg))
