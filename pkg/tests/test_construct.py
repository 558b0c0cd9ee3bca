import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import PI
from supermaximal.construct import (
    ActionAngleCoords,
    AngleTriple,
    Orientation,
    check_alpha,
    corner_map,
    necklace,
    polytope_slack,
    sample_component,
    sample_coords,
    triangle_pants,
    triangle_vertices,
)
from supermaximal.errors import EmptyPolytope, InvalidAngles, PolytopeViolation
from supermaximal.psl2 import fixed_point_elliptic, hyperbolic_distance
from supermaximal.rep import mirror, relative_euler_class, theta_vector
from supermaximal.symplectic import moment_map


def test_angle_triple_validation():
    with pytest.raises(InvalidAngles):
        AngleTriple(PI, PI, PI)  # sum 3 pi fits neither orientation
    with pytest.raises(InvalidAngles):
        AngleTriple(0.0, PI, PI, Orientation.CLOCKWISE)
    with pytest.raises(InvalidAngles):
        AngleTriple(1.9 * PI, 1.9 * PI, 0.1 * PI, Orientation.CLOCKWISE)
    AngleTriple(0.5 * PI, 0.5 * PI, 0.5 * PI, Orientation.CLOCKWISE)


def test_triangle_vertices_realize_angles():
    ts = (0.4 * PI, 0.7 * PI, 0.5 * PI)
    p1, p2, p3 = triangle_vertices(AngleTriple(*ts, Orientation.CLOCKWISE))
    assert p1 == 1j and p2.real == 0 and p3.imag > 0
    r = triangle_pants(AngleTriple(*ts, Orientation.CLOCKWISE))
    for g, p in zip(r.gens, (p1, p2, p3)):
        assert abs(fixed_point_elliptic(g) - p) < 1e-9
    # each side is nondegenerate
    assert min(hyperbolic_distance(p1, p2), hyperbolic_distance(p2, p3), hyperbolic_distance(p1, p3)) > 0.01


@pytest.mark.parametrize(
    "ts, orientation, euler",
    [((1.9, 1.9, 1.9), Orientation.ANTICLOCKWISE, 2), ((0.5, 0.5, 0.5), Orientation.CLOCKWISE, 1)],
)
def test_triangle_pants_examples(ts, orientation, euler):
    r = triangle_pants(AngleTriple(*(t * PI for t in ts), orientation))
    assert np.allclose(theta_vector(r), [t * PI for t in ts], atol=1e-12)
    assert relative_euler_class(r) == euler


@given(st.tuples(*(st.floats(1.35, 1.98) for _ in range(3))))
def test_mirror_of_anticlockwise_is_clockwise(ts):
    thetas = [t * PI for t in ts]
    anti = triangle_pants(AngleTriple(*thetas))
    cw = triangle_pants(AngleTriple(*(2 * PI - t for t in thetas), Orientation.CLOCKWISE))
    m = mirror(anti)
    assert np.allclose(theta_vector(m), theta_vector(cw), atol=1e-9)
    assert relative_euler_class(m) == relative_euler_class(cw) == 1


def test_check_alpha():
    assert check_alpha([1.8 * PI] * 4) == pytest.approx(1.2 * PI)
    with pytest.raises(EmptyPolytope):
        check_alpha([PI] * 4)
    with pytest.raises(EmptyPolytope):
        check_alpha([2.1 * PI, 1.9 * PI, 1.9 * PI])


def test_n4_example():
    alpha = [1.8 * PI] * 4
    assert np.allclose(polytope_slack(alpha, [PI]), [0.6 * PI, 0.6 * PI])
    r = necklace(ActionAngleCoords(alpha, [PI], [0.0]))
    assert relative_euler_class(r) == 3
    assert moment_map(r)[0] == pytest.approx(PI, abs=1e-9)
    assert np.allclose(theta_vector(r), alpha, atol=1e-9)


def test_n3_necklace_is_triangle():
    alpha = (1.9 * PI, 1.7 * PI, 1.8 * PI)
    r = necklace(ActionAngleCoords(alpha, (), ()))
    assert r == triangle_pants(AngleTriple(*alpha))
    assert relative_euler_class(r) == 2


def test_n5_example():
    alpha = [1.9 * PI] * 5
    coords = ActionAngleCoords(alpha, [0.5 * PI, 1.0 * PI], [0.3, 1.1])
    r = necklace(coords)
    assert relative_euler_class(r) == 4
    assert np.allclose(moment_map(r), [0.5 * PI, PI], atol=1e-8)
    assert r.relation_residual() < 1e-9


@pytest.mark.parametrize("x", [[0.1 * PI, PI], [0.5 * PI, 0.55 * PI], [0.5 * PI, 1.85 * PI]])
def test_necklace_rejects_points_outside_polytope(x):
    with pytest.raises(PolytopeViolation):
        necklace(ActionAngleCoords([1.9 * PI] * 5, x, [0.0, 0.0]))


def test_coords_length_checked():
    with pytest.raises(ValueError):
        ActionAngleCoords([1.9 * PI] * 5, [PI], [0.0, 0.0])


@pytest.mark.parametrize("n", [4, 5, 6, 7])
def test_sampled_reps_are_super_maximal(n):
    alpha = np.random.default_rng(n).uniform(2 * PI * (1 - 0.9 / n), 2 * PI * 0.999, size=n)
    for seed in range(5):
        coords = sample_coords(alpha, seed)
        assert np.all(polytope_slack(alpha, coords.x) > 0)
        assert all(0 <= t < PI for t in coords.t)
        r = necklace(coords)
        assert relative_euler_class(r) == n - 1
        assert np.allclose(theta_vector(r), alpha, atol=1e-9)
        assert np.allclose(moment_map(r), coords.x, atol=1e-8)


def test_sample_is_deterministic():
    alpha = [1.9 * PI] * 6
    assert sample_component(alpha, 11) == sample_component(alpha, 11)
    assert sample_component(alpha, 11) != sample_component(alpha, 12)


def test_n3_sample_ignores_seed():
    alpha = [1.9 * PI, 1.8 * PI, 1.7 * PI]
    vectors = {tuple(theta_vector(sample_component(alpha, s))) for s in range(4)}
    assert len(vectors) == 1


def test_corner_map_hits_vertices():
    alpha = [1.9 * PI] * 5
    assert np.allclose(corner_map(alpha, [0, 0]), [0.2 * PI, 0.3 * PI])
    assert np.allclose(corner_map(alpha, [1, 0]), [1.7 * PI, 1.8 * PI])
    assert np.allclose(corner_map(alpha, [0, 1]), [0.2 * PI, 1.8 * PI])
