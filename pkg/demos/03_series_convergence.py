"""Convergence of the Gauss-Kummer series and how many terms it takes to
match the corrected closed forms.

The series converges geometrically in h, so convergence is fast for round
ellipses and painfully slow as h -> 1.  The punchline: beating the
two-exponential correction's 0.57 ppm over b=1, a in [1, 1000] takes 148
series terms, versus one closed-form expression with four constants.
"""

import numpy as np

from ellipse_perimeter import (
    MeshSpec,
    VaryA,
    exact_perimeter,
    ivory_partial_sum,
    ivory_terms_needed,
    make_axes,
)

print("partial sums at a/b = 10 (h ~ 0.669):")
axes = make_axes(10, 1)
exact = exact_perimeter(axes)
for n in (1, 2, 4, 8, 16, 32, 64, 128):
    rel = ivory_partial_sum(axes, n) / exact - 1
    print(f"  {n:4d} terms: rel err {rel:+.3e}")

print("\nterms needed on b=1, a in [1, 1000] (2000-point mesh):")
mesh = MeshSpec(VaryA(b_fixed=1.0, a_min=1.0, a_max=1000.0), 2000)
for target_ppm in (10_000, 1000, 100, 10, 1, 0.57):
    n = ivory_terms_needed(target_ppm * 1e-6, mesh)
    print(f"  {target_ppm:>8g} ppm -> {n:4d} terms")
