"""Moment map, twist flows and the Delzant polytope of the torus action."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np

from .construct import alpha_bar, check_alpha
from .errors import AmbiguousClass, DegenerateSimplex, NonEllipticPantsCurve
from .psl2 import (
    TWO_PI,
    Kind,
    affine_to,
    classify,
    fixed_point_elliptic,
    psl_distance,
    rotation,
    rotation_angle_between,
)
from .rep import SphereRep, pants_curve
from .tolerance import DEFAULT_TOL, Tolerances

VOLUME_RTOL = 1e-9


def _elliptic_pants_curve(rep: SphereRep, i: int, tol: Tolerances):
    b = pants_curve(rep, i)
    try:
        cls = classify(b, tol)
    except AmbiguousClass as exc:
        raise NonEllipticPantsCurve(i, f"image of b_{i} is ambiguous: {exc}") from exc
    if cls.kind is not Kind.ELLIPTIC:
        raise NonEllipticPantsCurve(i, f"image of b_{i} is {cls.tag}, not elliptic")
    return b, cls.angle


def moment_map(rep: SphereRep, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """Rotation angles of the pants-curve images ``b_1, ..., b_{n-3}``."""
    return np.array([_elliptic_pants_curve(rep, i, tol)[1] for i in range(1, rep.n - 2)])


# ---------------------------------------------------------------------------
# Polytope


@dataclass(frozen=True)
class DelzantPolytope:
    """Simplex ``{x : A x <= b}`` in dimension ``n - 3`` with closed-form vertices."""

    A: np.ndarray
    b: np.ndarray
    vertices: np.ndarray
    lam: float

    @property
    def dim(self) -> int:
        return self.A.shape[1]

    def slack(self, x) -> np.ndarray:
        return self.b - self.A @ np.asarray(x, dtype=float)

    def contains(self, x, atol: float = 0.0) -> bool:
        return bool(np.all(self.slack(x) >= -atol))

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "lambda": self.lam,
            "halfspaces": [{"a": a.tolist(), "b": float(bb)} for a, bb in zip(self.A, self.b)],
            "vertices": self.vertices.tolist(),
        }


def halfspaces(alpha: Sequence[float]) -> Tuple[np.ndarray, np.ndarray]:
    """The n - 2 inequalities ``A beta <= b`` cutting out the moment polytope."""
    ab = alpha_bar(alpha)
    n = ab.size
    d = n - 3
    A = np.zeros((n - 2, d))
    b = np.zeros(n - 2)
    if d == 0:
        return A, b
    A[0, 0], b[0] = -1.0, -(ab[0] + ab[1])
    for i in range(1, d):
        A[i, i - 1], A[i, i], b[i] = 1.0, -1.0, -ab[i + 1]
    A[d, d - 1], b[d] = 1.0, TWO_PI - ab[n - 2] - ab[n - 1]
    return A, b


def delzant_polytope(alpha: Sequence[float]) -> DelzantPolytope:
    lam = check_alpha(alpha)
    ab = alpha_bar(alpha)
    d = ab.size - 3
    A, b = halfspaces(alpha)
    base = np.cumsum(ab)[1 : d + 1]
    # corner 0 and corners e_1..e_d of the standard simplex
    corners = np.vstack([np.zeros(d), np.eye(d)]) if d else np.zeros((1, 0))
    vertices = lam * np.cumsum(corners, axis=1) + base
    return DelzantPolytope(A=A, b=b, vertices=vertices, lam=lam)


def enumerate_vertices(A: np.ndarray, b: np.ndarray, atol: float = 1e-9) -> np.ndarray:
    """Brute-force vertex enumeration: solve every d-subset of facets, keep the feasible points."""
    m, d = A.shape
    if d == 0:
        return np.zeros((1, 0))
    found: List[np.ndarray] = []
    for rows in itertools.combinations(range(m), d):
        sub = A[list(rows)]
        if abs(np.linalg.det(sub)) < 1e-12:
            continue
        v = np.linalg.solve(sub, b[list(rows)])
        if np.all(A @ v <= b + atol) and not any(np.allclose(v, u, atol=atol) for u in found):
            found.append(v)
    return np.array(found)


def simplex_volume(vertices: np.ndarray) -> float:
    vertices = np.asarray(vertices, dtype=float)
    d = vertices.shape[1]
    if d == 0:
        return 1.0
    if vertices.shape[0] != d + 1:
        raise DegenerateSimplex(f"expected {d + 1} vertices, got {vertices.shape[0]}")
    det = np.linalg.det(vertices[1:] - vertices[0])
    scale = max(1.0, float(np.abs(vertices).max())) ** d
    if abs(det) <= 1e-13 * scale:
        raise DegenerateSimplex("simplex has zero volume")
    return abs(det) / math.factorial(d)


def polytope_volume(P: DelzantPolytope) -> float:
    return simplex_volume(P.vertices)


def symplectic_volume(alpha: Sequence[float]) -> float:
    """Total Goldman volume ``(pi lambda)^(n-3) / (n-3)!`` of the super-maximal component."""
    lam = check_alpha(alpha)
    d = len(alpha) - 3
    vol = (math.pi * lam) ** d / math.factorial(d)
    euclid = math.pi**d * polytope_volume(delzant_polytope(alpha))
    if abs(vol - euclid) > VOLUME_RTOL * vol:
        raise ArithmeticError(f"volume mismatch: {vol!r} vs pi^d * polytope volume {euclid!r}")
    return vol


# ---------------------------------------------------------------------------
# Twist flows


def twist_flow(rep: SphereRep, i: int, t: float, tol: Tolerances = DEFAULT_TOL) -> SphereRep:
    """Hamiltonian flow of ``beta_i`` for time ``t``.

    Conjugates ``c_{i+2}, ..., c_n`` by the rotation of angle ``2 t`` about the
    fixed point of the image of ``b_i``; period ``pi``.
    """
    b, _ = _elliptic_pants_curve(rep, i, tol)
    h = rotation(fixed_point_elliptic(b, tol), 2.0 * t)
    gens = rep.gens[: i + 1] + tuple(g.conjugate_by(h) for g in rep.gens[i + 1 :])
    return SphereRep(gens)


def rep_distance(r1: SphereRep, r2: SphereRep) -> float:
    """Largest generator-wise distance (no conjugation)."""
    return max(psl_distance(g, h) for g, h in zip(r1.gens, r2.gens))


def align(rep: SphereRep, target: SphereRep, tol: Tolerances = DEFAULT_TOL) -> SphereRep:
    """Conjugate ``rep`` so its first generator matches ``target``'s and the second's fixed point lines up.

    Both first generators must be elliptic; the second is aligned by rotating
    about the first fixed point, using its fixed point when elliptic and a
    scan over rotation angles otherwise.
    """
    p = fixed_point_elliptic(rep.gens[0], tol)
    q = fixed_point_elliptic(target.gens[0], tol)
    moved = rep.conjugate_by(affine_to(q) @ affine_to(p).inverse())
    try:
        za = fixed_point_elliptic(moved.gens[1], tol)
        zb = fixed_point_elliptic(target.gens[1], tol)
        s = rotation_angle_between(q, za, zb)
    except Exception:
        from scipy.optimize import minimize_scalar

        def cost(s):
            return psl_distance(moved.gens[1].conjugate_by(rotation(q, s)), target.gens[1])

        grid = np.linspace(0.0, TWO_PI, 73)
        s0 = grid[int(np.argmin([cost(s) for s in grid]))]
        s = minimize_scalar(cost, bracket=(s0 - 0.1, s0, s0 + 0.1)).x
    return moved.conjugate_by(rotation(q, s))


def conjugacy_distance(r1: SphereRep, r2: SphereRep, tol: Tolerances = DEFAULT_TOL) -> float:
    return rep_distance(align(r1, r2, tol), r2)


def twists_between(source: SphereRep, target: SphereRep, tol: Tolerances = DEFAULT_TOL):
    """Twist times carrying ``source`` to ``target`` up to conjugacy, for reps in the same moment fiber.

    Returns ``(t, residual)`` where ``t[i-1]`` in ``[0, pi)`` is the time for
    the flow along ``b_i`` and ``residual`` the remaining generator distance.
    """
    rep = align(source, target, tol)
    ts = []
    for i in range(1, rep.n - 2):
        b, _ = _elliptic_pants_curve(rep, i, tol)
        p = fixed_point_elliptic(b, tol)
        za = fixed_point_elliptic(rep.gens[i + 1], tol)
        zb = fixed_point_elliptic(target.gens[i + 1], tol)
        t = (rotation_angle_between(p, za, zb) / 2.0) % math.pi
        ts.append(t)
        rep = twist_flow(rep, i, t, tol)
    return np.array(ts), rep_distance(rep, target)
