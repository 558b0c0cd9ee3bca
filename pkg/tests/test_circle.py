import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import PI, angles, centers, elements, parabolic
from oracles import projective_lift
from supermaximal.circle import (
    M,
    LiftedElement,
    canonical_lift,
    product_power,
    special_lift,
    translation_number,
    translation_number_iterative,
)
from supermaximal.errors import RelationViolated
from supermaximal.psl2 import IDENTITY, GroupElement, rotation, theta

TWO_PI = 2 * PI


@pytest.mark.parametrize("a", [0.0, 0.4, PI, 5.5])
def test_rotation_about_i_lifts_to_translation(a):
    g = rotation(1j, a)
    xs = [0.0, 1.0, 2.0, -3.3, 7.9]
    assert np.allclose([canonical_lift(g, x) for x in xs], [x + a for x in xs], atol=1e-12)
    assert np.allclose(projective_lift(g.entries, [0.0, 1.0, 2.0]), [a, 1.0 + a, 2.0 + a], atol=1e-9)


@given(elements(), st.floats(-10, 10))
def test_canonical_lift_matches_projective_oracle(g, x):
    assert canonical_lift(g, 0.0) == pytest.approx(projective_lift(g.entries, [0.0])[0], abs=1e-9)
    assert canonical_lift(g, x) == pytest.approx(projective_lift(g.entries, [x])[0], abs=1e-6)


@given(elements(), st.floats(-10, 10))
def test_lift_commutes_with_deck(g, x):
    assert canonical_lift(g, x + TWO_PI) == pytest.approx(canonical_lift(g, x) + TWO_PI, abs=1e-9)


def test_deck_generator():
    assert M(0.3) == pytest.approx(0.3 + TWO_PI)
    assert translation_number(M) == pytest.approx(TWO_PI)


@given(elements(), elements(), st.floats(-5, 5))
def test_lifted_product_is_composition(g, h, x):
    gt, ht = LiftedElement(g, 1), LiftedElement(h, -2)
    assert (gt @ ht)(x) == pytest.approx(gt(ht(x)), abs=1e-7)
    assert gt.inverse()(gt(x)) == pytest.approx(x, abs=1e-7)


def test_hyperbolic_translation_number_zero():
    g = GroupElement.from_matrix(np.diag([2.0, 0.5]))
    assert translation_number(LiftedElement(g, 0)) in (0.0, TWO_PI)
    assert translation_number(special_lift(g)) == 0.0


def test_identity_special_lift_is_deck_generator():
    lift = special_lift(IDENTITY)
    assert lift == LiftedElement(IDENTITY, 1)
    assert lift(1.234) == pytest.approx(M(1.234))


@given(elements())
def test_special_lift_translation_number_is_theta(g):
    lift = special_lift(g)
    assert translation_number(lift) == pytest.approx(theta(g), abs=1e-9)
    assert translation_number_iterative(lift, 2000) == pytest.approx(theta(g), abs=TWO_PI / 2000 + 1e-9)


@pytest.mark.parametrize("sign", [+1, -1])
def test_parabolic_special_lifts(sign):
    g = parabolic(sign, 0.7, 1.3, 2.1)
    assert translation_number_iterative(special_lift(g), 5000) == pytest.approx(
        theta(g), abs=TWO_PI / 5000 + 1e-9
    )


@given(elements(), st.integers(-3, 3))
def test_translation_number_shifts_by_deck(g, k):
    t0 = translation_number(LiftedElement(g, 0))
    assert translation_number(LiftedElement(g, k)) == pytest.approx(t0 + k * TWO_PI, abs=1e-9)


@given(centers, angles, elements())
def test_translation_number_conjugation_invariant(p, a, h):
    g = rotation(p, a)
    hl = LiftedElement(h, 0)
    conj = hl @ special_lift(g) @ hl.inverse()
    assert translation_number(conj) == pytest.approx(a, abs=1e-7)


def test_product_power_trivial():
    assert product_power([IDENTITY] * 5) == 5


def test_product_power_inverse_pair():
    g = rotation(0.3 + 1.2j, 2.0)
    assert product_power([g, g.inverse(), IDENTITY]) == 2


def test_product_power_rejects_non_relation():
    with pytest.raises(RelationViolated):
        product_power([rotation(1j, 1.0), IDENTITY, IDENTITY])
