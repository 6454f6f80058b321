"""Structure maps: basis rules, linearity, homomorphism behavior, laws."""

import itertools
import random

import pytest

from qtorus.phases import ONE, PhaseScalar, phase_pow
from qtorus.algebra import CIRCLE, P2, P3, TORUS
from qtorus.maps import (
    GENERATOR_IMAGES,
    MAPS,
    antipode,
    circle_comult,
    comult,
    counit,
    embed_left,
    embed_right,
    lift_left_antipode,
    lift_left_comult,
    lift_left_counit,
    lift_right_antipode,
    lift_right_comult,
    lift_right_counit,
    mult_map,
)
from qtorus.suite import TrialConfig, random_element


def test_comult_examples():
    assert comult(TORUS.generator("U")) == P2.basis((1, 0, 1, 0))
    assert comult(TORUS.basis((2, 1))) == phase_pow(-2) * P2.basis((2, 1, 2, 1))
    assert comult(TORUS.unit()) == P2.unit()


def test_counit_examples():
    assert counit(TORUS.generator("U")) == ONE
    assert counit(TORUS.basis((1, 1))) == phase_pow(1)
    assert counit(TORUS.basis((2, 3))) == phase_pow(6)  # q^3


def test_antipode_examples():
    assert antipode(TORUS.generator("U")) == TORUS.basis((-1, 0))
    assert antipode(TORUS.basis((2, 3))) == TORUS.basis((-2, -3))
    assert antipode(TORUS.unit()) == TORUS.unit()


def test_mult_map_examples():
    assert mult_map(P2.basis((1, 2, 3, 4))) == phase_pow(-12) * TORUS.basis((4, 6))
    assert mult_map(P2.basis((1, 2, 3, 4))) == TORUS.basis((1, 2)) * TORUS.basis((3, 4))
    assert mult_map(P2.basis((2, -1, 0, 0))) == TORUS.basis((2, -1))
    assert mult_map(P2.basis((-1, -1, 1, 1))) == phase_pow(2) * TORUS.unit()


def test_lifted_comult_examples():
    assert lift_left_comult(P2.generator("U1")) == P3.basis((1, 0, 1, 0, 0, 0))
    assert lift_left_comult(P2.basis((1, 1, 2, 0))) == phase_pow(-1) * P3.basis((1, 1, 1, 1, 2, 0))
    assert lift_left_comult(P2.unit()) == P3.unit()
    assert lift_right_comult(P2.generator("U2")) == P3.basis((0, 0, 1, 0, 1, 0))
    assert lift_right_comult(P2.basis((2, 0, 1, 1))) == phase_pow(-1) * P3.basis((2, 0, 1, 1, 1, 1))
    assert lift_right_comult(P2.unit()) == P3.unit()


def test_lifted_counit_examples():
    assert lift_left_counit(P2.basis((1, 1, 2, 3))) == phase_pow(1) * TORUS.basis((2, 3))
    assert lift_right_counit(P2.basis((1, 1, 2, 3))) == phase_pow(6) * TORUS.basis((1, 1))
    assert lift_left_counit(P2.basis((0, 0, 4, -2))) == TORUS.basis((4, -2))


def test_lifted_antipode_examples():
    x = P2.basis((1, 2, 3, 4))
    assert lift_left_antipode(x) == P2.basis((-1, -2, 3, 4))
    assert lift_right_antipode(x) == P2.basis((1, 2, -3, -4))
    assert lift_left_antipode(lift_left_antipode(x)) == x


def test_circle_comult_examples():
    assert circle_comult(CIRCLE.basis((1,))) == TORUS.basis((1, 1))
    assert circle_comult(CIRCLE.basis((2,))) == phase_pow(-2) * TORUS.basis((2, 2))
    assert circle_comult(CIRCLE.basis((0,))) == TORUS.unit()


def test_embeddings():
    assert embed_left(TORUS.basis((2, -1))) == P2.basis((2, -1, 0, 0))
    assert embed_right(TORUS.basis((2, -1))) == P2.basis((0, 0, 2, -1))


def test_map_application_is_linear():
    cfg = TrialConfig(seed=11, trials=1)
    rng = random.Random(3)
    for fmap in MAPS.values():
        x = random_element(fmap.source, cfg, rng)
        y = random_element(fmap.source, cfg, rng)
        c = phase_pow(-3) * PhaseScalar(2)
        left = fmap(x + c * y)
        if fmap.target is None:
            assert left == fmap(x) + c * fmap(y)
        else:
            assert left == fmap(x) + c * fmap(y)


def test_map_rejects_wrong_source():
    with pytest.raises(ValueError):
        mult_map(TORUS.generator("U"))
    with pytest.raises(ValueError):
        comult(P2.unit())
    with pytest.raises(TypeError):
        counit(phase_pow(1))


def test_comult_is_algebra_homomorphism():
    cfg = TrialConfig(seed=5)
    rng = random.Random(5)
    for _ in range(50):
        x = random_element(TORUS, cfg, rng)
        y = random_element(TORUS, cfg, rng)
        assert comult(x * y) == comult(x) * comult(y)


def test_lifted_comults_are_algebra_homomorphisms():
    cfg = TrialConfig(seed=6, max_support=3, exponent_bound=2)
    rng = random.Random(6)
    for fmap in (lift_left_comult, lift_right_comult):
        for _ in range(40):
            x = random_element(P2, cfg, rng)
            y = random_element(P2, cfg, rng)
            assert fmap(x * y) == fmap(x) * fmap(y)


def test_antipode_is_homomorphism_not_antihomomorphism():
    u, v = TORUS.generator("U"), TORUS.generator("V")
    assert antipode(u * v) == antipode(u) * antipode(v)
    # U^-1 V^-1 = q V^-1 U^-1, mirroring U V = q V U
    assert antipode(u) * antipode(v) == phase_pow(2) * (antipode(v) * antipode(u))
    cfg = TrialConfig(seed=7)
    rng = random.Random(7)
    for _ in range(50):
        x = random_element(TORUS, cfg, rng)
        y = random_element(TORUS, cfg, rng)
        assert antipode(x * y) == antipode(x) * antipode(y)


def test_lifted_antipodes_are_not_homomorphisms():
    u1, v2 = P2.generator("U1"), P2.generator("V2")
    x = v2 * u1  # s * delta^(1,0,0,1)
    assert lift_left_antipode(x) != lift_left_antipode(v2) * lift_left_antipode(u1)
    assert lift_right_antipode(x) != lift_right_antipode(v2) * lift_right_antipode(u1)


def test_circle_comult_is_algebra_homomorphism():
    cfg = TrialConfig(seed=8)
    rng = random.Random(8)
    for _ in range(50):
        x = random_element(CIRCLE, cfg, rng)
        y = random_element(CIRCLE, cfg, rng)
        assert circle_comult(x * y) == circle_comult(x) * circle_comult(y)


def test_coassociativity_on_basis():
    for k, l in itertools.product(range(-3, 4), repeat=2):
        x = TORUS.basis((k, l))
        left = lift_left_comult(comult(x))
        right = lift_right_comult(comult(x))
        assert left == right == phase_pow(-2 * k * l) * P3.basis((k, l, k, l, k, l))


def test_counit_laws_on_basis():
    for k, l in itertools.product(range(-3, 4), repeat=2):
        x = TORUS.basis((k, l))
        assert lift_left_counit(comult(x)) == x
        assert lift_right_counit(comult(x)) == x


def test_antipode_law_on_basis():
    one = TORUS.unit()
    for k, l in itertools.product(range(-3, 4), repeat=2):
        x = TORUS.basis((k, l))
        expected = counit(x) * one
        assert mult_map(lift_left_antipode(comult(x))) == expected
        assert mult_map(lift_right_antipode(comult(x))) == expected
        assert expected == phase_pow(k * l) * one


def test_counit_is_not_multiplicative():
    u, v = TORUS.generator("U"), TORUS.generator("V")
    assert counit(u * v) == phase_pow(1)
    assert counit(u) * counit(v) == ONE
    assert counit(u * v) != counit(u) * counit(v)


def test_mu_collapses_the_two_embedded_copies():
    for a in itertools.product(range(-2, 3), repeat=2):
        for b in itertools.product(range(-2, 3), repeat=2):
            x, y = TORUS.basis(a), TORUS.basis(b)
            assert mult_map(embed_left(x) * embed_right(y)) == x * y


def test_generator_images_match_closed_forms_on_generators():
    for name, images in GENERATOR_IMAGES.items():
        fmap = MAPS[name]
        for gen_name, word in images.items():
            image = fmap(fmap.source.generator(gen_name))
            expected = fmap.target.unit()
            for target_name, power in word:
                expected = expected * fmap.target.generator(target_name, power)
            assert image == expected
