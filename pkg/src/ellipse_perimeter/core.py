"""Domain types shared by every other module: validated semi-axes, derived
shape parameters, and method identifiers.

All types are immutable values and safe to share between threads.
"""

import math
from dataclasses import dataclass
from enum import Enum


@dataclass(frozen=True)
class EllipseAxes:
    """A validated semi-axis pair with ``a >= b`` guaranteed.

    Construction normalizes the pair by swapping if ``b > a``, so every
    downstream formula may assume ``a >= b`` (and therefore ``b/a`` in
    ``[0, 1]``).  The degenerate flat ellipse ``b = 0`` is allowed; its
    perimeter is exactly ``4a``.

    Parameters
    ----------
    a : float
        Semi-major axis, > 0 after normalization.
    b : float
        Semi-minor axis, >= 0.
    """

    a: float
    b: float

    def __post_init__(self):
        a = float(self.a)
        b = float(self.b)
        if not (math.isfinite(a) and math.isfinite(b)):
            raise ValueError(f"semi-axes must be finite, got a={self.a!r}, b={self.b!r}")
        if b > a:
            a, b = b, a
        if a <= 0:
            raise ValueError(f"semi-major axis must be positive, got max(a, b) = {a!r}")
        if b < 0:
            raise ValueError(f"semi-minor axis must be nonnegative, got min(a, b) = {b!r}")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @property
    def ratio(self) -> float:
        """Axis ratio ``b/a`` in [0, 1]."""
        return self.b / self.a


def make_axes(a: float, b: float) -> EllipseAxes:
    """Build a normalized :class:`EllipseAxes` from two semi-axis lengths."""
    return EllipseAxes(a, b)


@dataclass(frozen=True)
class ShapeParams:
    """Scale-free shape descriptors of an ellipse.

    Attributes
    ----------
    h : float
        Squared axis-difference ratio ``((a - b) / (a + b))**2`` in [0, 1].
        0 for a circle, 1 for the flat ellipse.
    e : float
        Eccentricity ``sqrt(1 - b**2/a**2)`` in [0, 1].
    m : float
        Elliptic parameter ``e**2`` in [0, 1].
    """

    h: float
    e: float
    m: float


def h_param(a, b):
    """Squared axis-difference ratio ``((a - b)/(a + b))**2``.

    Works elementwise on arrays as well as on scalars.
    """
    t = (a - b) / (a + b)
    return t * t


def shape_params(axes: EllipseAxes) -> ShapeParams:
    """Derive the shape parameters (h, e, m) of a validated axis pair."""
    r = axes.b / axes.a
    m = 1.0 - r * r
    return ShapeParams(h=float(h_param(axes.a, axes.b)), e=math.sqrt(m), m=m)


class Formula(str, Enum):
    """Tags for every implemented perimeter approximation."""

    FAGNANO = "fagnano"
    EULER = "euler"
    EULER_IVORY = "euler-ivory"
    RAMANUJAN_I = "ramanujan1"
    RAMANUJAN_II = "ramanujan2"
    CANTRELL = "cantrell"
    KOSHY_1 = "koshy1"
    KOSHY_2 = "koshy2"
    R2_ONE_EXP = "r2-one-exp"
    R2_TWO_EXP = "r2-two-exp"


# Formulas whose result depends on CorrectionParams.
CORRECTED_FORMULAS = frozenset({Formula.R2_ONE_EXP, Formula.R2_TWO_EXP})


@dataclass(frozen=True)
class MethodId:
    """A formula tag plus the options some formulas carry.

    ``n_terms`` is meaningful only for the Euler-Ivory series truncation
    (number of summed terms, >= 1).  ``sigmoid`` gates the logistic factor of
    the corrected Ramanujan II methods and is ignored by all others.
    """

    formula: Formula
    n_terms: int = 1
    sigmoid: bool = True

    def __post_init__(self):
        if not isinstance(self.n_terms, int) or self.n_terms < 1:
            raise ValueError(f"n_terms must be a positive integer, got {self.n_terms!r}")

    @property
    def label(self) -> str:
        """Stable text form used in CSV/JSON output; `parse` round-trips it."""
        if self.formula is Formula.EULER_IVORY:
            return f"{self.formula.value}:{self.n_terms}"
        if self.formula in CORRECTED_FORMULAS and not self.sigmoid:
            return f"{self.formula.value}:nosigmoid"
        return self.formula.value

    @classmethod
    def parse(cls, text: str) -> "MethodId":
        """Parse a method label such as ``"cantrell"`` or ``"euler-ivory:148"``."""
        name, _, opt = text.strip().partition(":")
        try:
            formula = Formula(name)
        except ValueError:
            known = ", ".join(f.value for f in Formula)
            raise ValueError(f"unknown method {name!r}; expected one of: {known}") from None
        if formula is Formula.EULER_IVORY:
            n_terms = int(opt) if opt else 1
            return cls(formula, n_terms=n_terms)
        if opt == "nosigmoid" and formula in CORRECTED_FORMULAS:
            return cls(formula, sigmoid=False)
        if opt:
            raise ValueError(f"method {name!r} takes no {opt!r} option")
        return cls(formula)
