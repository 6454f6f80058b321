#!/usr/bin/env python3
"""The noncommutative 2-torus: exact coefficients and twisted products.

The algebra lives on finitely supported integer grids: a basis monomial
delta^(m,n) is the product U^m V^n of the two generators, and the only
relation is U V = q V U for a deformation parameter q on the unit circle.
Coefficients are Laurent polynomials in a formal square root s of q (over
Gaussian rationals), so every identity shown here holds for all |q| = 1
simultaneously.
"""

from qtorus import TORUS, phase_pow

u = TORUS.generator("U")
v = TORUS.generator("V")
q = phase_pow(2)   # s**2
s = phase_pow(1)   # q**(1/2)

print("== generators and the defining relation ==")
print("U        =", u)
print("V        =", v)
print("U V      =", u * v)
print("V U      =", v * u)            # picks up q^(-1)
print("q (V U)  =", q * (v * u))      # equals U V again
assert u * v == q * (v * u)

print()
print("== general basis products ==")
# delta^(m,n) delta^(k,l) = q^(-k n) delta^(m+k, n+l)
x = TORUS.basis((2, 1))
y = TORUS.basis((1, 3))
print("U^2 V   times  U V^3  =", x * y)
assert x * y == phase_pow(-2) * TORUS.basis((3, 4))

print()
print("== exact scalar arithmetic ==")
print("s = q^(1/2)              ->", s)
print("q^(-1/2) * q = q^(1/2)   ->", phase_pow(-1) * q)
print("(1+s)(1-s) = 1 - q       ->", (phase_pow(0) + s) * (phase_pow(0) - s))

print()
print("== mixed elements ==")
z = 2 * u + s * v - TORUS.unit()
print("2U + q^(1/2) V - 1       =", z)
print("squared                  =", z * z)

print()
print("== numeric evaluation at a concrete q ==")
# q = exp(2 pi i theta); at theta = 1/2, q = -1
for theta in (0.0, 0.5, 1.0 / 3.0):
    values = (v * u).eval_numeric(theta)
    print(f"theta = {theta:<8} V U evaluates to", values)
