"""Lifted action of PSL(2,R) on the universal cover of RP^1.

The line covering RP^1 is parametrized by ``x = 2 phi`` where ``phi`` is the
angle of a representative vector ``(cos phi, sin phi)``. In this chart the
generator ``m`` of the deck group is ``x -> x + 2 pi``.

A sign-specific matrix ``M`` with Iwasawa decomposition ``M = K(kappa) A N``
has the continuous lift ``x -> x + 2 kappa + 2 delta(x / 2)`` where ``delta``
is the displacement of the upper-triangular factor, which never leaves the
open half-plane of directions it starts in. The canonical lift of a group
element uses the sign with ``kappa in [0, pi)``, so its value at 0 lies in
``[0, 2 pi)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import InconsistentWinding, RelationViolated
from .psl2 import (
    IDENTITY,
    TWO_PI,
    GroupElement,
    Kind,
    classify,
    compose,
    lift_sign_entries,
    psl_distance,
)
from .tolerance import DEFAULT_TOL, Tolerances

SAMPLE_POINTS = (0.0, 1.7, 4.1)
WINDING_TOL = 1e-6


def _iwasawa(entries):
    a, b, c, d = entries
    kappa = math.atan2(c, a)
    co, s = math.cos(kappa), math.sin(kappa)
    # K(-kappa) M, upper triangular with positive diagonal
    return kappa, (co * a + s * c, co * b + s * d, 0.0, -s * b + co * d)


def _lift_map(entries):
    """The lift as a closure, with the Iwasawa split computed once."""
    kappa, (p, q, _, r) = _iwasawa(entries)
    shift = 2.0 * kappa
    cos, sin, atan2 = math.cos, math.sin, math.atan2

    def lift(x: float) -> float:
        phi = 0.5 * x
        v0, v1 = cos(phi), sin(phi)
        u0, u1 = p * v0 + q * v1, r * v1
        return x + shift + 2.0 * atan2(v0 * u1 - v1 * u0, v0 * u0 + v1 * u1)

    return lift


def _lift_value(entries, x: float) -> float:
    return _lift_map(entries)(x)


def canonical_lift(g: GroupElement, x: float) -> float:
    """Value at ``x`` of the lift of ``g`` whose value at 0 lies in ``[0, 2 pi)``."""
    return _lift_value(lift_sign_entries(g), x)


def fixed_direction(g: GroupElement) -> float:
    """A point of the line covering a fixed point of a non-elliptic ``g``."""
    a, b, c, d = g.entries
    t = a + d
    disc = max(0.0, t * t - 4.0)
    best = None
    for lam in ((t + math.sqrt(disc)) / 2.0, (t - math.sqrt(disc)) / 2.0):
        for v in ((b, lam - a), (lam - d, c)):
            nv = math.hypot(*v)
            if best is None or nv > best[0]:
                best = (nv, v)
    if best[0] == 0.0:
        return 0.0  # every direction is fixed
    v0, v1 = best[1]
    return 2.0 * math.atan2(v1, v0)


def canonical_winding(g: GroupElement, tol: Tolerances = DEFAULT_TOL, cls=None) -> int:
    """Translation number of the canonical lift divided by 2 pi, for non-elliptic ``g``.

    The canonical lift of a hyperbolic or parabolic element is either the lift
    fixing the preimages of its fixed points (winding 0) or that lift composed
    with ``m`` (winding 1).
    """
    cls = cls or classify(g, tol)
    if cls.kind is Kind.ELLIPTIC:
        raise ValueError("elliptic elements have no fixed direction")
    x = 0.0 if cls.kind is Kind.IDENTITY else fixed_direction(g)
    return round((canonical_lift(g, x) - x) / TWO_PI)


@dataclass(frozen=True)
class LiftedElement:
    """Element of the universal cover: canonical lift of ``base`` followed by ``m ** offset``."""

    base: GroupElement
    offset: int = 0

    def __call__(self, x: float) -> float:
        return canonical_lift(self.base, x) + TWO_PI * self.offset

    def __matmul__(self, other: "LiftedElement") -> "LiftedElement":
        base = self.base @ other.base
        lhs = canonical_lift(self.base, canonical_lift(other.base, 0.0))
        j = round((lhs - canonical_lift(base, 0.0)) / TWO_PI)
        return LiftedElement(base, self.offset + other.offset + j)

    def inverse(self) -> "LiftedElement":
        inv = self.base.inverse()
        # canonical(g) o canonical(g^-1) = m^j
        j = round((canonical_lift(self.base, canonical_lift(inv, 0.0))) / TWO_PI)
        return LiftedElement(inv, -self.offset - j)

    def iterate(self, x: float, times: int) -> float:
        lift = _lift_map(lift_sign_entries(self.base))
        shift = TWO_PI * self.offset
        for _ in range(times):
            x = lift(x) + shift
        return x


M = LiftedElement(IDENTITY, 1)


def lifted_eval(gt: LiftedElement, x: float) -> float:
    return gt(x)


def translation_number(gt: LiftedElement, tol: Tolerances = DEFAULT_TOL) -> float:
    """Closed-form translation number; falls back to iteration for ambiguous classes."""
    from .errors import AmbiguousClass

    try:
        cls = classify(gt.base, tol)
    except AmbiguousClass:
        return translation_number_iterative(gt)
    if cls.kind is Kind.ELLIPTIC:
        return cls.angle + TWO_PI * gt.offset
    return TWO_PI * (gt.offset + canonical_winding(gt.base, tol, cls))


def translation_number_iterative(gt: LiftedElement, iterations: int = 10_000, x0: float = 0.0) -> float:
    """Average displacement over ``iterations`` steps; error at most ``2 pi / iterations``."""
    return (gt.iterate(x0, iterations) - x0) / iterations


def special_lift(g: GroupElement, tol: Tolerances = DEFAULT_TOL) -> LiftedElement:
    """The lift of ``g`` whose translation number equals ``theta(g)``."""
    cls = classify(g, tol)
    if cls.kind is Kind.ELLIPTIC:
        return LiftedElement(g, 0)
    target = {
        Kind.HYPERBOLIC: 0,
        Kind.POSITIVE_PARABOLIC: 0,
        Kind.NEGATIVE_PARABOLIC: 1,
        Kind.IDENTITY: 1,
    }[cls.kind]
    return LiftedElement(g, target - canonical_winding(g, tol, cls))


def product_power(gs: Sequence[GroupElement], tol: Tolerances = DEFAULT_TOL) -> int:
    """Integer ``k`` with (product of special lifts) ``== m ** k``.

    The product of ``gs`` must be the identity; the composed special lifts are
    evaluated at three sample points, each of which must be displaced by the
    same multiple of 2 pi.
    """
    residual = psl_distance(compose(gs), IDENTITY)
    if residual > tol.relation:
        raise RelationViolated(residual)
    lifts = [special_lift(g, tol) for g in gs]
    ks = []
    for x in SAMPLE_POINTS:
        y = x
        for lift in reversed(lifts):
            y = lift(y)
        q = (y - x) / TWO_PI
        k = round(q)
        if abs(q - k) * TWO_PI > WINDING_TOL:
            raise InconsistentWinding(f"displacement at x={x} is {y - x!r}, not a multiple of 2 pi")
        ks.append(k)
    if len(set(ks)) != 1:
        raise InconsistentWinding(f"sample points disagree on the winding: {ks}")
    return ks[0]
