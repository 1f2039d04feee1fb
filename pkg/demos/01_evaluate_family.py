"""Evaluate members of the integral family by both routes.

The family is I_n(z) = ∫₀¹ K(k)·k/(z+k²)^(n+3/2) dk with K the complete
elliptic integral of the first kind.  The numeric route runs tanh-sinh
quadrature with an AGM kernel; the exact route differentiates a closed form
symbolically and evaluates it in floating point.  Watching the two columns
agree to dozens of digits is the whole point.
"""

from fractions import Fraction

import mpmath

from ellipkint import In_exact_real, IntegralSpec, integral_In_numeric

print(f"{'n':>3} {'z':>6} {'quadrature':>30} {'closed form':>30} {'|diff|':>10}")
with mpmath.workdps(40):
    for n in (0, 1, 2, 5):
        for z in (Fraction(1, 3), Fraction(1), Fraction(3), Fraction(10)):
            numeric = integral_In_numeric(IntegralSpec(n, z)).value
            exact = In_exact_real(n, z)
            print(
                f"{n:>3} {str(z):>6} {mpmath.nstr(numeric, 25):>30} "
                f"{mpmath.nstr(exact, 25):>30} {mpmath.nstr(abs(numeric - exact), 2):>10}"
            )

# the quadrature reports its own convergence diagnostics
result = integral_In_numeric(IntegralSpec(8, Fraction(1, 10)))
print(
    f"\nI_8(1/10) = {mpmath.nstr(result.value, 20)} "
    f"(levels={result.levels_used}, evaluations={result.evaluations}, "
    f"error estimate={mpmath.nstr(result.error_estimate, 2)})"
)
