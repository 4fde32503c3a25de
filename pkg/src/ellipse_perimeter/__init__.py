"""Closed-form ellipse perimeter approximations with a high-precision
elliptic-integral reference, error benchmarking, and minimax refitting of the
exponential-correction constants."""

__version__ = "0.1.0"

from .approximations import (
    FLAT_LIMIT_DEFICIT,
    ONE_EXP_DEFAULTS,
    TWO_EXP_DEFAULTS,
    CorrectionParams,
    array_evaluator,
    cantrell,
    euler,
    evaluate,
    fagnano,
    koshy1,
    koshy2,
    r2_one_exp,
    r2_two_exp,
    ramanujan1,
    ramanujan2,
    sigmoid_factor,
)
from .core import (
    CORRECTED_FORMULAS,
    EllipseAxes,
    Formula,
    MethodId,
    ShapeParams,
    h_param,
    make_axes,
    shape_params,
)
from .error_analysis import (
    BENCHMARK_METHODS,
    RANGE_PRESETS,
    TABLE_RANGES,
    ErrorRecord,
    MaxErrorCell,
    MeshSpec,
    VaryA,
    VaryB,
    benchmark_table,
    build_mesh,
    error_curve,
    max_error,
    read_error_curve_csv,
    to_percent,
    to_ppm,
    write_benchmark_json,
    write_error_curve_csv,
)
from .fitting import (
    FitProblem,
    FitResult,
    FitVariant,
    ParameterBounds,
    fit_one_exp,
    fit_two_exp,
    objective_phi,
    write_fit_report,
)
from .oracle import (
    DEFAULT_PRECISION,
    PrecisionConfig,
    elliptic_E,
    elliptic_E_mp,
    exact_perimeter,
    exact_perimeter_mp,
)
from .series import (
    ivory_partial_sum,
    ivory_terms_needed,
    series_coefficients,
)

__all__ = [
    "__version__",
    "BENCHMARK_METHODS",
    "CORRECTED_FORMULAS",
    "CorrectionParams",
    "DEFAULT_PRECISION",
    "EllipseAxes",
    "ErrorRecord",
    "FLAT_LIMIT_DEFICIT",
    "FitProblem",
    "FitResult",
    "FitVariant",
    "Formula",
    "MaxErrorCell",
    "MeshSpec",
    "MethodId",
    "ONE_EXP_DEFAULTS",
    "ParameterBounds",
    "PrecisionConfig",
    "RANGE_PRESETS",
    "ShapeParams",
    "TABLE_RANGES",
    "TWO_EXP_DEFAULTS",
    "VaryA",
    "VaryB",
    "array_evaluator",
    "benchmark_table",
    "build_mesh",
    "cantrell",
    "elliptic_E",
    "elliptic_E_mp",
    "error_curve",
    "euler",
    "evaluate",
    "exact_perimeter",
    "exact_perimeter_mp",
    "fagnano",
    "fit_one_exp",
    "fit_two_exp",
    "h_param",
    "ivory_partial_sum",
    "ivory_terms_needed",
    "koshy1",
    "koshy2",
    "make_axes",
    "max_error",
    "objective_phi",
    "r2_one_exp",
    "r2_two_exp",
    "ramanujan1",
    "ramanujan2",
    "read_error_curve_csv",
    "series_coefficients",
    "shape_params",
    "sigmoid_factor",
    "to_percent",
    "to_ppm",
    "write_benchmark_json",
    "write_error_curve_csv",
    "write_fit_report",
]
