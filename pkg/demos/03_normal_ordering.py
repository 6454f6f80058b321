#!/usr/bin/env python3
"""Normal ordering words in the generators.

A word like V2 U1 V1 is brought into the canonical order U1 V1 U2 V2 by
adjacent swaps; every swap contributes a power of s read off the relation
table.  This rewriting never consults the cocycle matrices, which makes it
an independent oracle for the twisted product.
"""

import random

from qtorus import P2, TORUS, normal_order, word_of_index
from qtorus.rewrite import GeneratorSymbol, Word, normal_order_exponent, swap_exponent

print("== single swaps ==")
w = Word(TORUS, (GeneratorSymbol(1, 1), GeneratorSymbol(0, 1)))   # V U
phase, idx = normal_order(w)
print(f"V U       -> {phase} * delta^{idx}")

w = Word(P2, tuple(GeneratorSymbol(p, 1) for p in (0, 2, 1, 3)))  # U1 U2 V1 V2
phase, idx = normal_order(w)
print(f"U1 U2 V1 V2 -> {phase} * delta^{idx}")

print()
print("== powers and inverses ==")
w = Word(TORUS, (GeneratorSymbol(0, 1), GeneratorSymbol(0, -1)))  # U U^-1
print("U U^-1    ->", normal_order(w))
w = Word(TORUS, (GeneratorSymbol(1, -2), GeneratorSymbol(0, 3)))  # V^-2 U^3
phase, idx = normal_order(w)
print(f"V^-2 U^3  -> {phase} * delta^{idx}")
# cross-check through the algebra product
assert TORUS.basis((0, -2)) * TORUS.basis((3, 0)) == phase * TORUS.basis(idx)

print()
print("== basis words round-trip with no phase ==")
for target in [(2, -1), (0, 3), (-1, -1)]:
    w = word_of_index(TORUS, target)
    print(f"word of delta^{target}: {w}  ->", normal_order(w))

print()
print("== order of rewriting does not matter ==")
rng = random.Random(1)
seq = [(rng.randrange(4), rng.choice([-2, -1, 1, 2])) for _ in range(5)]
e0, idx0 = normal_order_exponent(P2, seq)
print("word (position, power):", seq)
print(f"normal form: s^{e0} * delta^{idx0}")
for trial in range(3):
    shuffled = list(seq)
    tracked = 0
    for _ in range(6):
        i = rng.randrange(len(shuffled) - 1)
        (a, p), (b, r) = shuffled[i], shuffled[i + 1]
        tracked += swap_exponent(P2, a, b) * p * r
        shuffled[i], shuffled[i + 1] = shuffled[i + 1], shuffled[i]
    e1, idx1 = normal_order_exponent(P2, shuffled)
    assert (idx1, e1 + tracked) == (idx0, e0)
    print(f"  reshuffle {trial}: s^{e1} with tracked swap phase s^{tracked} -> same element")
