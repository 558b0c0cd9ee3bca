"""Pairs of pants from hyperbolic triangles, and the necklace gluing.

The necklace glues ``n - 2`` triangle-group pants along the curves
``b_i = c_{i+2} ... c_n``. Pants ``P_1`` carries ``(c_1, c_2, b_1)``, the
middle pants ``P_i`` carry ``(b_{i-1}^-1, c_{i+1}, b_i)`` and the last one
carries ``(b_{n-3}^-1, c_{n-1}, c_n)``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np

from .errors import EmptyPolytope, GluingFailure, InvalidAngles, PolytopeViolation
from .psl2 import (
    TWO_PI,
    affine_to,
    psl_distance,
    reflection,
    rotation,
)
from .rep import SphereRep, new_rep

GLUE_TOL = 1e-8


class Orientation(enum.Enum):
    CLOCKWISE = "clockwise"
    ANTICLOCKWISE = "anticlockwise"


@dataclass(frozen=True)
class AngleTriple:
    t1: float
    t2: float
    t3: float
    orientation: Orientation = Orientation.ANTICLOCKWISE

    def __post_init__(self):
        ts = (self.t1, self.t2, self.t3)
        if not all(0.0 < t < TWO_PI for t in ts):
            raise InvalidAngles(f"angles {ts} must lie in (0, 2 pi)")
        total = sum(ts)
        if self.orientation is Orientation.CLOCKWISE and not total < TWO_PI:
            raise InvalidAngles(f"clockwise triangle needs angle sum < 2 pi, got {total / math.pi:.12g} pi")
        if self.orientation is Orientation.ANTICLOCKWISE and not total > 2.0 * TWO_PI:
            raise InvalidAngles(f"anticlockwise triangle needs angle sum > 4 pi, got {total / math.pi:.12g} pi")

    @property
    def angles(self):
        return (self.t1, self.t2, self.t3)

    def triangle_angles(self):
        """Interior angles of the hyperbolic triangle at p_1, p_2, p_3."""
        if self.orientation is Orientation.CLOCKWISE:
            return tuple(t / 2.0 for t in self.angles)
        return tuple(math.pi - t / 2.0 for t in self.angles)


def triangle_vertices(angles: AngleTriple) -> Tuple[complex, complex, complex]:
    """Vertices with ``p_1 = i`` and ``p_2`` above it on the imaginary axis."""
    A1, A2, A3 = angles.triangle_angles()
    side12 = math.acosh((math.cos(A1) * math.cos(A2) + math.cos(A3)) / (math.sin(A1) * math.sin(A2)))
    side13 = math.acosh((math.cos(A1) * math.cos(A3) + math.cos(A2)) / (math.sin(A1) * math.sin(A3)))
    p1 = 1j
    p2 = 1j * math.exp(side12)
    # rotating about i by +A1 turns the upward ray clockwise; clockwise triangles put p_3 on the right
    turn = A1 if angles.orientation is Orientation.CLOCKWISE else -A1
    p3 = rotation(1j, turn)(1j * math.exp(side13))
    return p1, p2, p3


def triangle_pants(angles: AngleTriple) -> SphereRep:
    """Pants rep generated by double reflections in the sides of a triangle."""
    p1, p2, p3 = triangle_vertices(angles)
    s12, s23, s31 = reflection(p1, p2), reflection(p2, p3), reflection(p3, p1)
    return new_rep([s31 @ s12, s12 @ s23, s23 @ s31])


# ---------------------------------------------------------------------------
# Necklace


def alpha_bar(alpha: Sequence[float]) -> np.ndarray:
    return TWO_PI - np.asarray(alpha, dtype=float)


def check_alpha(alpha: Sequence[float]) -> float:
    """Return ``lambda = sum(alpha) - 2 (n - 1) pi``, raising ``EmptyPolytope`` unless it lies in (0, 2 pi)."""
    alpha = np.asarray(alpha, dtype=float)
    n = alpha.size
    if n < 3:
        raise ValueError(f"need at least 3 peripheral angles, got {n}")
    if not np.all((alpha > 0) & (alpha < TWO_PI)):
        raise EmptyPolytope("peripheral angles must lie in (0, 2 pi)")
    lam = float(alpha.sum()) - (n - 1) * TWO_PI
    if not 0.0 < lam < TWO_PI:
        raise EmptyPolytope(
            f"sum(alpha) = {alpha.sum() / math.pi:.12g} pi is outside ({2 * (n - 1)}, {2 * n}) pi"
        )
    return lam


def polytope_slack(alpha: Sequence[float], x: Sequence[float]) -> np.ndarray:
    """Slack of the n - 2 moment polytope inequalities at ``x`` (all >= 0 inside)."""
    ab = alpha_bar(alpha)
    x = np.asarray(x, dtype=float)
    n = ab.size
    if x.size != n - 3:
        raise ValueError(f"expected {n - 3} action values, got {x.size}")
    if n == 3:
        return np.zeros(1) + (TWO_PI - ab.sum())
    slack = [x[0] - ab[0] - ab[1]]
    slack += [x[i] - x[i - 1] - ab[i + 1] for i in range(1, n - 3)]
    slack.append(TWO_PI - ab[n - 2] - ab[n - 1] - x[-1])
    return np.array(slack)


@dataclass(frozen=True)
class ActionAngleCoords:
    alpha: Tuple[float, ...]
    x: Tuple[float, ...]
    t: Tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "alpha", tuple(float(a) for a in self.alpha))
        object.__setattr__(self, "x", tuple(float(a) for a in self.x))
        object.__setattr__(self, "t", tuple(float(a) for a in self.t))
        n = len(self.alpha)
        if len(self.x) != n - 3 or len(self.t) != n - 3:
            raise ValueError(f"n = {n} needs {n - 3} actions and twists, got {len(self.x)} and {len(self.t)}")

    @property
    def n(self):
        return len(self.alpha)


def necklace(coords: ActionAngleCoords) -> SphereRep:
    """Glue anticlockwise triangle pants into a super-maximal rep with the given actions and twists.

    ``theta(c_i) == alpha_i`` and ``theta(b_i) == x_i``. The twists are flow
    times: the untwisted gluing is moved by the commuting twist flows, each
    rotating everything beyond ``b_i`` by ``2 t_i`` about the fixed point of ``b_i``.
    """
    from .symplectic import twist_flow

    alpha, x, t = coords.alpha, coords.x, coords.t
    n = coords.n
    check_alpha(alpha)
    if n == 3:
        return triangle_pants(AngleTriple(*alpha))
    slack = polytope_slack(alpha, x)
    if not np.all(slack > 0):
        raise PolytopeViolation(f"actions {x} outside the open polytope (slack {slack.tolist()})")

    first = AngleTriple(alpha[0], alpha[1], x[0])
    c1, c2, b = triangle_pants(first).gens
    # fixed point of b, carried along exactly rather than re-solved from the product
    q = triangle_vertices(first)[2]
    gens = [c1, c2]
    for i in range(1, n - 2):  # pants P_{i+1}, glued along b_i
        last = i == n - 3
        third = alpha[n - 1] if last else x[i]
        triple = AngleTriple(TWO_PI - x[i - 1], alpha[i + 1], third)
        u, v, w = triangle_pants(triple).gens
        p1, _, p3 = triangle_vertices(triple)
        g = affine_to(q) @ affine_to(p1).inverse()
        target = b.inverse()
        # relative to the entry size, which grows along the necklace
        err = psl_distance(u.conjugate_by(g), target) / max(1.0, *map(abs, target.entries))
        if err > GLUE_TOL:
            raise GluingFailure(f"fixed-point matching along b_{i} missed by {err:.3e} (relative)")
        gens.append(v.conjugate_by(g))
        b = w.conjugate_by(g)
        q = g(p3)
        if last:
            gens.append(b)
    rep = new_rep(gens)
    for i, ti in enumerate(t, start=1):
        if ti:
            rep = twist_flow(rep, i, ti)
    return rep


def corner_map(alpha: Sequence[float], mu: Sequence[float]) -> np.ndarray:
    """Affine image of a point of the standard simplex in the moment polytope."""
    ab = alpha_bar(alpha)
    lam = check_alpha(alpha)
    mu = np.asarray(mu, dtype=float)
    return lam * np.cumsum(mu) + np.cumsum(ab)[1 : ab.size - 2]


def sample_component(alpha: Sequence[float], seed: int = 0) -> SphereRep:
    """Random rep in the super-maximal component with peripheral angles ``alpha``.

    Actions are uniform on the moment polytope, twists uniform on ``[0, pi)``.
    """
    return necklace(sample_coords(alpha, seed))


def sample_coords(alpha: Sequence[float], seed: int = 0) -> ActionAngleCoords:
    check_alpha(alpha)
    d = len(alpha) - 3
    rng = np.random.Generator(np.random.Philox(seed))
    while True:
        # uniform on the open simplex {mu >= 0, sum mu <= 1}
        e = rng.exponential(size=d + 1)
        mu = e[:d] / e.sum()
        x = corner_map(alpha, mu)
        if d == 0 or np.all(polytope_slack(alpha, x) > 0):
            break
    t = rng.uniform(0.0, math.pi, size=d)
    return ActionAngleCoords(tuple(alpha), tuple(x), tuple(t))
