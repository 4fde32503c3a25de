"""Reproduce the max-relative-error benchmark over the three standard ranges.

Each cell is the worst |relative error| of one method over one mesh:
the h-domain sweep (a=1000, b in [1, 1000]), the low-eccentricity band
(b=1, a in [1.0001, 100]), and the high-eccentricity band (b=1,
a in [100, 1000]).

A 2000-point mesh keeps this demo quick; the CLI's ``bench-table`` runs the
full 10^4-point version (the cell values move by well under a percent).
"""

from ellipse_perimeter import benchmark_table
from ellipse_perimeter.error_analysis import format_benchmark_text

table = benchmark_table(n_points=2000)
print(format_benchmark_text(table))
print("\nworst cell per method:")
for label, cells in table.items():
    worst = max(cells.values(), key=lambda c: c.max_abs_rel)
    print(f"  {label:12s} {1e6 * worst.max_abs_rel:12.2f} ppm  "
          f"at a={worst.argmax_a:.4g}, b={worst.argmax_b:.4g}")
