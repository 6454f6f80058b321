#!/usr/bin/env python3
"""The quantum-group-like structure maps and their laws.

The torus carries a comultiplication into the deformed square, a counit, an
antipode and a multiplication-collapse map.  The classical Hopf axioms hold
in their deformed form, with two twists worth noticing: the antipode is an
algebra homomorphism (not an anti-homomorphism), and the counit is linear
but deliberately not multiplicative.
"""

from qtorus import (
    CIRCLE,
    P2,
    TORUS,
    antipode,
    circle_comult,
    comult,
    counit,
    lift_left_antipode,
    lift_left_comult,
    lift_left_counit,
    lift_right_antipode,
    lift_right_comult,
    lift_right_counit,
    mult_map,
    phase_pow,
)

u = TORUS.generator("U")
v = TORUS.generator("V")

print("== the maps on simple elements ==")
print("comult(U)                   =", comult(u))
print("comult(U^2 V)               =", comult(TORUS.basis((2, 1))))
print("counit(U V)                 =", counit(u * v))
print("antipode(U^2 V^3)           =", antipode(TORUS.basis((2, 3))))
print("mult_map(U1 V1^2 U2^3 V2^4) =", mult_map(P2.basis((1, 2, 3, 4))))
print("circle comult(z^2)          =", circle_comult(CIRCLE.basis((2,))))

print()
print("== comultiplication is an algebra homomorphism ==")
x = 2 * u + v
y = u * v - TORUS.unit()
assert comult(x * y) == comult(x) * comult(y)
print("comult(x y) == comult(x) comult(y)   for x = 2U+V, y = UV-1")

print()
print("== coassociativity ==")
lhs = lift_left_comult(comult(TORUS.basis((2, 1))))
rhs = lift_right_comult(comult(TORUS.basis((2, 1))))
print("(left lift)(comult(U^2 V))  =", lhs)
print("(right lift)(comult(U^2 V)) =", rhs)
assert lhs == rhs

print()
print("== counit laws ==")
z = 3 * TORUS.basis((2, -1)) + phase_pow(1) * v
assert lift_left_counit(comult(z)) == z
assert lift_right_counit(comult(z)) == z
print("collapsing the counit on either factor of comult(x) returns x")

print()
print("== antipode law ==")
for k, l in [(1, 1), (2, 3), (-1, 2)]:
    x = TORUS.basis((k, l))
    step1 = comult(x)                       # q^(-kl/2) delta^(k,l,k,l)
    step2 = lift_left_antipode(step1)       # q^(-kl/2) delta^(-k,-l,k,l)
    step3 = mult_map(step2)                 # q^(-kl/2) q^(kl) = q^(kl/2) times 1
    assert step3 == counit(x) * TORUS.unit()
    assert mult_map(lift_right_antipode(step1)) == counit(x) * TORUS.unit()
    print(f"U^{k} V^{l}:  {step1}  ->  {step2}  ->  {step3}")

print()
print("== what fails, and is supposed to fail ==")
print("counit(U V)          =", counit(u * v), "  but")
print("counit(U) counit(V)  =", counit(u) * counit(v))
assert counit(u * v) != counit(u) * counit(v)

a, b = P2.generator("V2"), P2.generator("U1")
assert lift_left_antipode(a * b) != lift_left_antipode(a) * lift_left_antipode(b)
print("the one-sided antipode lifts are linear but not algebra maps")
