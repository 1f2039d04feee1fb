"""Pairwise rational relations between the z = 1 family values.

Because sqrt(2)*I_k(1) = a_k + b_k*pi with rational a_k, b_k, any two family
members are linked by sqrt(2)*I_n(1) + P*sqrt(2)*I_m(1) + Q = 0 with
rational P, Q.  This script tabulates the pairs and verifies one of them
numerically.
"""

import mpmath

from ellipkint import IntegralSpec, integral_In_numeric, relation
from ellipkint.specialvalues import in1_pair

print("sqrt(2)*I_k(1) = a + b*pi decompositions:")
for k in range(7):
    a, b = in1_pair(k)
    print(f"  k={k}: a = {a}, b = {b}")

print("\nRelations against m = 0:")
for n in range(1, 7):
    P, Q = relation(n, 0)
    print(f"  sqrt(2)*I_{n}(1) + ({P})*sqrt(2)*I_0(1) + ({Q}) = 0")

n, m = 5, 2
P, Q = relation(n, m)
with mpmath.workdps(40):
    sqrt2 = mpmath.sqrt(2)
    In = integral_In_numeric(IntegralSpec(n, 1)).value
    Im = integral_In_numeric(IntegralSpec(m, 1)).value
    residual = sqrt2 * In + mpmath.mpf(P.numerator) / P.denominator * sqrt2 * Im
    residual += mpmath.mpf(Q.numerator) / Q.denominator
print(f"\nNumeric replay of the (n={n}, m={m}) relation with quadrature values:")
print(f"  P = {P}, Q = {Q}, residual = {mpmath.nstr(abs(residual), 2)}")
