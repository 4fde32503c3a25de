"""Export the error curves and the benchmark table that the plotting
frontend (plots/ at the repository root) consumes.

Writes one CSV per method over the figure range plus bench_table.json into
./plot_inputs.  Equivalent CLI:

    ellipse-perimeter error-curve --method cantrell --range figure --out cantrell.csv
    ellipse-perimeter bench-table --format json --out bench_table.json
"""

from pathlib import Path

from ellipse_perimeter import (
    Formula,
    MethodId,
    benchmark_table,
    error_curve,
    write_benchmark_json,
    write_error_curve_csv,
)
from ellipse_perimeter.error_analysis import RANGE_PRESETS

OUT = Path("plot_inputs")
OUT.mkdir(exist_ok=True)

CURVE_METHODS = [
    MethodId(Formula.CANTRELL),
    MethodId(Formula.KOSHY_1),
    MethodId(Formula.KOSHY_2),
    MethodId(Formula.RAMANUJAN_II),
    MethodId(Formula.R2_ONE_EXP),
    MethodId(Formula.R2_TWO_EXP),
]

mesh = RANGE_PRESETS["figure"]
for method in CURVE_METHODS:
    path = OUT / f"{method.label}.csv"
    write_error_curve_csv(error_curve(method, mesh), path)
    print(f"wrote {path}")

path = OUT / "bench_table.json"
write_benchmark_json(benchmark_table(), path)
print(f"wrote {path}")
