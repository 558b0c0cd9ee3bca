import math

import numpy as np
import pytest
from hypothesis import assume, settings
from hypothesis import strategies as st

from supermaximal.psl2 import GroupElement, affine_to, rotation

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

PI = math.pi

centers = st.builds(complex, st.floats(-5, 5), st.floats(0.05, 20))
angles = st.floats(1e-3, 2 * PI - 1e-3)


@st.composite
def elements(draw):
    """Random PSL(2,R) element away from the parabolic band."""
    kind = draw(st.sampled_from(["elliptic", "hyperbolic", "general"]))
    if kind == "elliptic":
        return rotation(draw(centers), draw(angles))
    if kind == "hyperbolic":
        lam = draw(st.floats(1.05, 8.0))
        h = affine_to(draw(centers)) @ rotation(1j, draw(st.floats(0, 2 * PI)))
        return GroupElement.from_matrix((lam, 0.0, 0.0, 1.0 / lam)).conjugate_by(h)
    a, b, c = (draw(st.floats(-3, 3)) for _ in range(3))
    m = np.array([[1.0 + a * a, b], [c, 1.0 + b * b + c * c]])
    if np.linalg.det(m) <= 1e-3:
        m = np.eye(2) + 0.1 * np.array([[a, b], [c, -a]])
    g = GroupElement.from_matrix(m)
    # stay clear of the parabolic band, which has its own tests
    assume(abs(abs(g.trace) - 2.0) > 1e-6)
    return g


def parabolic(sign, center_x=0.0, scale=1.0, turn=0.0):
    """Parabolic fixing a boundary point; ``sign=+1`` gives [[1, -s], [0, 1]] conjugates."""
    base = GroupElement.from_matrix((1.0, -sign * scale, 0.0, 1.0))
    h = rotation(1j, turn) if turn else None
    g = base.conjugate_by(h) if h is not None else base
    return g.conjugate_by(GroupElement.from_matrix((1.0, center_x, 0.0, 1.0)))


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
