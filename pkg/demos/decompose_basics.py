"""Tour of composition, decomposition, and the determining coordinates.

Run:  python3 demos/decompose_basics.py
"""

from fractions import Fraction

from polydecomp import (
    compose,
    dimension,
    degree_bound,
    divisor_plan,
    is_decomposable,
    nt_coordinates,
    nt_set,
    parse_polynomial,
    format_polynomial,
    right_component,
    section,
    try_decompose,
)

# Composition multiplies degrees: g of degree 2 after h of degree 2.
g = parse_polynomial("1,1,0")   # x^2 + x
h = parse_polynomial("1,2,0")   # x^2 + 2x
f = compose(g, h)
print("g =", g)
print("h =", h)
print("f = g(h) =", f, " ->", format_polynomial(f))

# Decomposing recovers exactly the pair we started from.
dec = try_decompose(f, 2)
print("\ndecomposed at d=2: g =", dec.g, ", h =", dec.h)
assert dec.g == g and dec.h == h

# A polynomial can decompose at several divisors (x^6 at d=2 and d=3) or at
# none (x^4 + x fails: the Taylor remainder around x^2 is the non-constant x).
print("\nx^6 decomposes as:")
for d, dec in is_decomposable(parse_polynomial("1,0,0,0,0,0,0")):
    print(f"  d={d}:  g = {dec.g},  h = {dec.h}")
print("x^4 + x decomposes as:", is_decomposable(parse_polynomial("1,0,0,1,0")))

# Which coefficients matter?  For n = 20, d = 5 only seven of the nineteen
# free coefficients determine the candidate (g, h); the other twelve are the
# directions in which the tube of the next demo is thickened.
ns = nt_set(20, 5)
print(f"\nn=20, d=5: determining indices {ns.nt}")
print(f"complement size (codimension) = {ns.codim}, dimension = {dimension(20, 5)}")
print(f"degree bound for the image variety: 5^7 = {degree_bound(20, 5)}")

# The section maps any assignment of those seven coordinates to the unique
# decomposable polynomial sharing them.
b = {i: Fraction(1, i) for i in ns.nt}
f20 = section(b, 20, 5)
print("\nsection of b =", {i: str(v) for i, v in b.items()})
print("  f =", format_polynomial(f20))
print("  round trip:", nt_coordinates(f20, 5) == b)
print("  h from the top three coefficients only:", right_component(f20, 5))

# Divisor bookkeeping for the union-of-components experiments.
for n in (4, 6, 20):
    plan = divisor_plan(n)
    print(f"\nn={n}: proper divisors {plan.proper_divisors}, "
          f"least prime {plan.least_prime}, delta = {plan.delta}")
