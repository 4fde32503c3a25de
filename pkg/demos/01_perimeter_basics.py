"""Tour of the closed-form perimeter approximations on a few ellipses.

For each ellipse we print the exact perimeter (high-precision elliptic
integral) and the signed relative error of every implemented formula, from
Fagnano's 18th-century pi*(a+b) to the exponentially corrected Ramanujan II.
"""

from ellipse_perimeter import (
    BENCHMARK_METHODS,
    evaluate,
    exact_perimeter,
    make_axes,
    shape_params,
    to_ppm,
)

ELLIPSES = [(1, 1), (2, 1), (5, 3), (10, 1), (100, 1), (1000, 1), (1, 0)]

for a, b in ELLIPSES:
    axes = make_axes(a, b)
    sp = shape_params(axes)
    exact = exact_perimeter(axes)
    print(f"\nellipse a={axes.a:g} b={axes.b:g}   (h={sp.h:.6g}, e={sp.e:.6g})")
    print(f"  exact perimeter = {exact:.15g}")
    for method in BENCHMARK_METHODS:
        approx = evaluate(method, axes)
        ppm = to_ppm((approx - exact) / exact)
        print(f"  {method.label:12s} {approx:18.12f}   {ppm:+12.4f} ppm")
