import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import PI
from supermaximal.construct import AngleTriple, Orientation, sample_component
from supermaximal.curves import (
    Word,
    all_base_curves,
    audit_non_hyperbolic,
    base_curve,
    braid_act,
    braid_images,
    curve_word,
    evaluate,
    free_reduce,
)
from supermaximal.errors import InvalidRange
from supermaximal.psl2 import Kind, classify, psl_distance, rotation
from supermaximal.rep import SphereRep, new_rep, random_rep


def rel_close(g, h, rtol=1e-9):
    scale = max(1.0, max(abs(x) for x in g.entries))
    return psl_distance(g, h) <= rtol * scale


def test_free_reduce():
    assert free_reduce([1, 2, -2, -1, 3]) == (3,)
    assert Word((1, -1)).letters == ()
    assert (Word((1, 2)) * Word((-2, 3))).letters == (1, 3)
    assert Word((1, 2, 3)).inverse().letters == (-3, -2, -1)
    with pytest.raises(ValueError):
        Word((0,))


def test_base_curve():
    assert base_curve(1, 2, 4).letters == (1, 2)
    assert base_curve(2, 4).letters == (2, 3, 4)
    with pytest.raises(InvalidRange):
        base_curve(3, 2)
    with pytest.raises(InvalidRange):
        base_curve(1, 4, 4)
    assert len(all_base_curves(4)) == 9


def test_braid_substitution():
    assert braid_act(1, +1, Word((1,))).letters == (1, 2, -1)
    assert braid_act(1, +1, Word((2,))).letters == (1,)
    assert braid_act(1, -1, Word((1,))).letters == (2,)
    assert braid_act(1, -1, Word((2,))).letters == (-2, 1, 2)
    with pytest.raises(InvalidRange):
        braid_act(0, 1, Word((1,)))


@given(st.lists(st.integers(-4, 4).filter(bool), max_size=12), st.integers(1, 3), st.sampled_from([-1, 1]))
def test_braid_inverse_pair(letters, k, s):
    w = Word(tuple(letters))
    assert braid_act(k, -s, braid_act(k, s, w)) == w


@pytest.mark.parametrize("k", [1, 2, 3])
def test_braid_preserves_full_product(k):
    full = Word((1, 2, 3, 4))
    for s in (1, -1):
        assert braid_act(k, s, full) == full


@given(st.integers(0, 1000), st.integers(1, 4), st.sampled_from([-1, 1]))
def test_peripheral_images_stay_conjugate(seed, k, s):
    r = random_rep(5, np.random.default_rng(seed), scale=0.5)
    for j in range(1, 6):
        w = braid_act(k, s, Word((j,)))
        tr = evaluate(r, w).trace
        targets = {abs(g.trace) for g in r.gens}
        assert min(abs(abs(tr) - t) for t in targets) < 1e-9 * max(1.0, abs(tr))


@given(st.integers(0, 1000), st.lists(st.tuples(st.integers(1, 4), st.sampled_from([-1, 1])), max_size=6))
def test_image_tracking_matches_words(seed, braids):
    r = sample_component([1.9 * PI] * 5, seed)
    gens = list(r.gens)
    for k, s in braids:
        gens = braid_images(gens, k, s)
    moved = SphereRep(tuple(gens))
    for curve in [(1, 2), (2, 4), (3, 3)]:
        w = curve_word(curve, braids)
        assert rel_close(evaluate(r, w), evaluate(moved, base_curve(*curve)), 1e-8)


def test_audit_necklace_rep_is_clean():
    r = sample_component([1.9 * PI] * 5, 3)
    report = audit_non_hyperbolic(r, depth=20, samples=300, seed=1)
    assert report.ok and report.checked == 300
    assert report.max_abs_trace < 2.0


def test_audit_finds_hyperbolic_peripheral():
    # two elliptics whose product is hyperbolic
    g1 = rotation(1j, 0.5 * PI)
    g2 = rotation(20j, 0.5 * PI)
    g3 = (g1 @ g2).inverse()
    assert classify(g3).kind is Kind.HYPERBOLIC
    r = new_rep([g1, g2, g3])
    report = audit_non_hyperbolic(r, depth=5, samples=50)
    assert not report.ok
    peripheral = [v for v in report.violations if v["curve"] == [3, 3] and not v["braids"]]
    assert peripheral and peripheral[0]["word"] == [3]


def test_audit_is_deterministic():
    r = random_rep(4, np.random.default_rng(2))
    a = audit_non_hyperbolic(r, depth=8, samples=100, seed=5).to_json()
    b = audit_non_hyperbolic(r, depth=8, samples=100, seed=5).to_json()
    assert a == b


def test_clockwise_triangle_pants_is_clean():
    from supermaximal.construct import triangle_pants

    # every simple closed curve on a pair of pants is peripheral
    base = triangle_pants(AngleTriple(0.5 * PI, 0.5 * PI, 0.5 * PI, Orientation.CLOCKWISE))
    assert audit_non_hyperbolic(base, 5, 50).ok


def test_audit_survives_exponential_growth():
    r = random_rep(6, np.random.default_rng(9), scale=2.0)
    report = audit_non_hyperbolic(r, depth=200, samples=200, seed=0)
    assert report.checked + report.skipped == 200
    assert not report.ok
