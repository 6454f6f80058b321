"""Structure maps between the torus and its deformed tensor powers.

Each map is given by a rule on basis monomials and extended linearly; since
elements have finite support the extension is a finite sum.  The maps:

* ``comult``          torus -> p2,  U |-> U1 U2, V |-> V1 V2 (an algebra map)
* ``counit``          torus -> scalars,  U^k V^l |-> q^(k l / 2)
* ``antipode``        torus -> torus,  U |-> U^-1, V |-> V^-1 (an algebra map)
* ``mult_map``        p2 -> torus, collapses the two factors
* ``lift_left_comult`` / ``lift_right_comult``    p2 -> p3, comult on one factor
* ``lift_left_counit`` / ``lift_right_counit``    p2 -> torus, counit on one factor
* ``lift_left_antipode`` / ``lift_right_antipode``  p2 -> p2, antipode on one factor
* ``circle_comult``   circle -> torus,  z^n |-> (U V)^n
* ``embed_left`` / ``embed_right``   torus -> p2, the two canonical copies

The lifted one-factor maps are linear but (apart from the comultiplication
lifts) not algebra homomorphisms, because the product on p2 is twisted.
The circle comultiplication is an algebra homomorphism out of the
commutative convolution algebra; no counit or antipode fits it, so none is
defined.

Maps are immutable and application is pure; everything is thread-safe.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Union

from .phases import ZERO, PhaseScalar, phase_pow
from .algebra import (
    CIRCLE,
    P2,
    P3,
    TORUS,
    AlgebraDescriptor,
    AlgebraElement,
    MultiIndex,
)

__all__ = [
    "LinearMap",
    "comult",
    "counit",
    "antipode",
    "mult_map",
    "lift_left_comult",
    "lift_right_comult",
    "lift_left_counit",
    "lift_right_counit",
    "lift_left_antipode",
    "lift_right_antipode",
    "circle_comult",
    "embed_left",
    "embed_right",
    "MAPS",
    "GENERATOR_IMAGES",
]

BasisImage = Union[AlgebraElement, PhaseScalar]


@dataclass(frozen=True)
class LinearMap:
    """A linear map defined by its values on basis monomials.

    ``target`` is None for scalar-valued maps.  Applying the map to an
    element is the coefficient-weighted sum of the basis rule over the
    support, so f(x + c*y) = f(x) + c*f(y) by construction.
    """

    name: str
    source: AlgebraDescriptor
    target: AlgebraDescriptor | None
    rule: Callable[[MultiIndex], BasisImage] = field(repr=False)

    def on_basis(self, idx: MultiIndex) -> BasisImage:
        return self.rule(self.source.check_index(idx))

    def __call__(self, x: AlgebraElement) -> BasisImage:
        if not isinstance(x, AlgebraElement):
            raise TypeError(f"map {self.name!r} applies to algebra elements")
        if x.algebra != self.source:
            raise ValueError(
                f"map {self.name!r} expects elements of {self.source.name!r}, "
                f"got {x.algebra.name!r}"
            )
        if self.target is None:
            total = ZERO
            for idx, c in x.support.items():
                total = total + c * self.rule(idx)
            return total
        out = {}
        for idx, c in x.support.items():
            image = self.rule(idx)
            for jdx, v in image.support.items():
                acc = out.get(jdx)
                cv = c * v
                out[jdx] = cv if acc is None else acc + cv
        return AlgebraElement._raw(
            self.target, {i: c for i, c in out.items() if c}
        )

    def __repr__(self) -> str:
        tgt = self.target.name if self.target is not None else "scalar"
        return f"LinearMap({self.name!r}: {self.source.name} -> {tgt})"


def _comult_rule(idx: MultiIndex) -> AlgebraElement:
    k, l = idx
    return phase_pow(-k * l) * P2.basis((k, l, k, l))


def _counit_rule(idx: MultiIndex) -> PhaseScalar:
    k, l = idx
    return phase_pow(k * l)


def _antipode_rule(idx: MultiIndex) -> AlgebraElement:
    k, l = idx
    # U^-k V^-l is already normal-ordered, so no phase arises
    return TORUS.basis((-k, -l))


def _mult_rule(idx: MultiIndex) -> AlgebraElement:
    k, l, m, n = idx
    # U^k V^l U^m V^n = q^(-l m) U^(k+m) V^(l+n)
    return phase_pow(-2 * l * m) * TORUS.basis((k + m, l + n))


def _lift_left_comult_rule(idx: MultiIndex) -> AlgebraElement:
    k, l, m, n = idx
    return phase_pow(-k * l) * P3.basis((k, l, k, l, m, n))


def _lift_right_comult_rule(idx: MultiIndex) -> AlgebraElement:
    k, l, m, n = idx
    return phase_pow(-m * n) * P3.basis((k, l, m, n, m, n))


def _lift_left_counit_rule(idx: MultiIndex) -> AlgebraElement:
    k, l, m, n = idx
    return phase_pow(k * l) * TORUS.basis((m, n))


def _lift_right_counit_rule(idx: MultiIndex) -> AlgebraElement:
    k, l, m, n = idx
    return phase_pow(m * n) * TORUS.basis((k, l))


def _lift_left_antipode_rule(idx: MultiIndex) -> AlgebraElement:
    k, l, m, n = idx
    return P2.basis((-k, -l, m, n))


def _lift_right_antipode_rule(idx: MultiIndex) -> AlgebraElement:
    k, l, m, n = idx
    return P2.basis((k, l, -m, -n))


def _circle_comult_rule(idx: MultiIndex) -> AlgebraElement:
    (n,) = idx
    # (U V)^n = q^(-n(n-1)/2) U^n V^n, valid for every integer n
    return phase_pow(-n * (n - 1)) * TORUS.basis((n, n))


def _embed_left_rule(idx: MultiIndex) -> AlgebraElement:
    k, l = idx
    return P2.basis((k, l, 0, 0))


def _embed_right_rule(idx: MultiIndex) -> AlgebraElement:
    k, l = idx
    return P2.basis((0, 0, k, l))


comult = LinearMap("delta", TORUS, P2, _comult_rule)
counit = LinearMap("epsilon", TORUS, None, _counit_rule)
antipode = LinearMap("S", TORUS, TORUS, _antipode_rule)
mult_map = LinearMap("mu", P2, TORUS, _mult_rule)
lift_left_comult = LinearMap("delta-id", P2, P3, _lift_left_comult_rule)
lift_right_comult = LinearMap("id-delta", P2, P3, _lift_right_comult_rule)
lift_left_counit = LinearMap("eps-id", P2, TORUS, _lift_left_counit_rule)
lift_right_counit = LinearMap("id-eps", P2, TORUS, _lift_right_counit_rule)
lift_left_antipode = LinearMap("S-id", P2, P2, _lift_left_antipode_rule)
lift_right_antipode = LinearMap("id-S", P2, P2, _lift_right_antipode_rule)
circle_comult = LinearMap("circle-delta", CIRCLE, TORUS, _circle_comult_rule)
embed_left = LinearMap("embed-left", TORUS, P2, _embed_left_rule)
embed_right = LinearMap("embed-right", TORUS, P2, _embed_right_rule)

MAPS: dict[str, LinearMap] = {
    m.name: m
    for m in (
        comult,
        counit,
        antipode,
        mult_map,
        lift_left_comult,
        lift_right_comult,
        lift_left_counit,
        lift_right_counit,
        lift_left_antipode,
        lift_right_antipode,
        circle_comult,
    )
}

# Defining generator images of the maps whose closed-form basis rules are
# derived rather than displayed; each entry maps a source generator to a word
# (name, power)... in the target.  The suite replays these images through the
# rewriting oracle to certify the closed forms above.
GENERATOR_IMAGES: dict[str, dict[str, tuple[tuple[str, int], ...]]] = {
    "delta": {"U": (("U1", 1), ("U2", 1)), "V": (("V1", 1), ("V2", 1))},
    "S": {"U": (("U", -1),), "V": (("V", -1),)},
    "delta-id": {
        "U1": (("U1", 1), ("U2", 1)),
        "V1": (("V1", 1), ("V2", 1)),
        "U2": (("U3", 1),),
        "V2": (("V3", 1),),
    },
    "id-delta": {
        "U1": (("U1", 1),),
        "V1": (("V1", 1),),
        "U2": (("U2", 1), ("U3", 1)),
        "V2": (("V2", 1), ("V3", 1)),
    },
    "circle-delta": {"z": (("U", 1), ("V", 1))},
}
