"""Isometries of the upper half-plane as elements of PSL(2,R).

Elements are stored as the four entries of a determinant-one matrix, with the
sign fixed so that the first entry of magnitude above ``SIGN_EPS`` is
positive. Orientation-reversing isometries (``AntiElement``) are stored as
determinant ``-1`` matrices acting by ``z -> (a conj(z) + b) / (c conj(z) + d)``.
"""

from __future__ import annotations

import cmath
import enum
import math
import sys
from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence

import numpy as np

from .errors import AmbiguousClass, DegenerateGeodesic, InvalidCenter, NotElliptic
from .tolerance import DEFAULT_TOL, Tolerances

TWO_PI = 2.0 * math.pi
SIGN_EPS = 1e-9


def _canonical_sign(a, b, c, d):
    for x in (a, b, c, d):
        if abs(x) > SIGN_EPS:
            if x < 0:
                return -a, -b, -c, -d
            break
    return a, b, c, d


def _normalize(a, b, c, d, det_sign=1.0):
    det = (a * d - b * c) * det_sign
    if not det > 0 or not math.isfinite(det):
        raise ValueError(f"matrix has determinant {a * d - b * c!r}, expected sign {det_sign:+.0f}")
    # already unimodular up to rounding: keep the entries so normalization is idempotent
    if abs(det - 1.0) <= 8.0 * sys.float_info.epsilon * (abs(a * d) + abs(b * c)):
        return _canonical_sign(a, b, c, d)
    s = 1.0 / math.sqrt(det)
    return _canonical_sign(a * s, b * s, c * s, d * s)


def _entries(m) -> tuple:
    if isinstance(m, (GroupElement, AntiElement)):
        return m.entries
    arr = np.asarray(m, dtype=float).reshape(-1)
    if arr.shape != (4,):
        raise ValueError(f"expected a 2x2 matrix or 4 entries, got shape {np.shape(m)}")
    return tuple(float(x) for x in arr)


def _mul(p, q):
    a, b, c, d = p
    e, f, g, h = q
    return (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)


@dataclass(frozen=True)
class GroupElement:
    a: float
    b: float
    c: float
    d: float

    @classmethod
    def from_matrix(cls, m) -> "GroupElement":
        """Renormalize any positive-determinant 2x2 matrix into PSL(2,R)."""
        return cls(*_normalize(*_entries(m)))

    @property
    def entries(self):
        return (self.a, self.b, self.c, self.d)

    @property
    def matrix(self) -> np.ndarray:
        return np.array([[self.a, self.b], [self.c, self.d]])

    def to_list(self):
        return [self.a, self.b, self.c, self.d]

    @property
    def trace(self) -> float:
        return self.a + self.d

    def inverse(self) -> "GroupElement":
        return GroupElement(*_canonical_sign(self.d, -self.b, -self.c, self.a))

    def __matmul__(self, other):
        if isinstance(other, GroupElement):
            return GroupElement(*_normalize(*_mul(self.entries, other.entries)))
        if isinstance(other, AntiElement):
            return AntiElement(*_normalize(*_mul(self.entries, other.entries), det_sign=-1.0))
        return NotImplemented

    def __call__(self, z):
        """Moebius action on a point of the closed upper half-plane (``math.inf`` allowed)."""
        if _is_inf(z):
            return math.inf if self.c == 0 else self.a / self.c
        den = self.c * z + self.d
        if den == 0:
            return math.inf
        return (self.a * z + self.b) / den

    def conjugate_by(self, h) -> "GroupElement":
        """Return ``h g h^-1`` for an orientation-preserving or reversing ``h``."""
        return h @ self @ h.inverse()

    def __repr__(self):
        return f"GroupElement([[{self.a:.6g}, {self.b:.6g}], [{self.c:.6g}, {self.d:.6g}]])"


@dataclass(frozen=True)
class AntiElement:
    a: float
    b: float
    c: float
    d: float

    @classmethod
    def from_matrix(cls, m) -> "AntiElement":
        return cls(*_normalize(*_entries(m), det_sign=-1.0))

    @property
    def entries(self):
        return (self.a, self.b, self.c, self.d)

    @property
    def matrix(self) -> np.ndarray:
        return np.array([[self.a, self.b], [self.c, self.d]])

    def inverse(self) -> "AntiElement":
        # inverse of a det -1 matrix is -adj
        return AntiElement(*_canonical_sign(-self.d, self.b, self.c, -self.a))

    def __matmul__(self, other):
        if isinstance(other, AntiElement):
            return GroupElement(*_normalize(*_mul(self.entries, other.entries)))
        if isinstance(other, GroupElement):
            return AntiElement(*_normalize(*_mul(self.entries, other.entries), det_sign=-1.0))
        return NotImplemented

    def __call__(self, z):
        if _is_inf(z):
            return math.inf if self.c == 0 else self.a / self.c
        w = z.conjugate()
        den = self.c * w + self.d
        if den == 0:
            return math.inf
        return (self.a * w + self.b) / den


IDENTITY = GroupElement(1.0, 0.0, 0.0, 1.0)
# z -> -conj(z), reflection in the imaginary axis
STANDARD_REFLECTION = AntiElement(*_canonical_sign(-1.0, 0.0, 0.0, 1.0))


def psl_distance(g, h) -> float:
    """Frobenius distance between two elements, minimized over the sign ambiguity."""
    p, q = g.entries, h.entries
    plus = math.sqrt(sum((x - y) ** 2 for x, y in zip(p, q)))
    minus = math.sqrt(sum((x + y) ** 2 for x, y in zip(p, q)))
    return min(plus, minus)


def compose(gs: Sequence[GroupElement]) -> GroupElement:
    """Left-to-right product ``gs[0] @ gs[1] @ ...``; empty product is the identity."""
    out = (1.0, 0.0, 0.0, 1.0)
    for g in gs:
        out = _mul(out, g.entries)
    return GroupElement.from_matrix(out)


# ---------------------------------------------------------------------------
# Classification


class Kind(enum.Enum):
    IDENTITY = "identity"
    ELLIPTIC = "elliptic"
    POSITIVE_PARABOLIC = "positive_parabolic"
    NEGATIVE_PARABOLIC = "negative_parabolic"
    HYPERBOLIC = "hyperbolic"

    @property
    def is_parabolic(self):
        return self in (Kind.POSITIVE_PARABOLIC, Kind.NEGATIVE_PARABOLIC)


class IsometryClass(NamedTuple):
    kind: Kind
    angle: Optional[float] = None

    @property
    def tag(self) -> str:
        return self.kind.value


def lift_sign_entries(g: GroupElement):
    """The matrix sign whose first column points into the half-plane ``atan2(c, a) in [0, pi)``.

    This is the representative used to anchor canonical lifts to the real line.
    """
    a, b, c, d = g.entries
    if c > 0 or (c == 0 and a > 0):
        return a, b, c, d
    return -a, -b, -c, -d


def elliptic_angle(g: GroupElement) -> float:
    a, b, c, d = lift_sign_entries(g)
    disc = (a - d) ** 2 + 4.0 * b * c
    return 2.0 * math.atan2(math.sqrt(max(0.0, -disc)), a + d)


def classify(g: GroupElement, tol: Tolerances = DEFAULT_TOL) -> IsometryClass:
    """Conjugacy class of ``g``, with the rotation angle for elliptics."""
    t = abs(g.trace)
    if t < 2.0 - tol.classify:
        return IsometryClass(Kind.ELLIPTIC, elliptic_angle(g))
    if t > 2.0 + tol.classify:
        return IsometryClass(Kind.HYPERBOLIC)
    a, b, c, d = g.entries
    if a + d < 0:
        a, b, c, d = -a, -b, -c, -d
    dist = math.sqrt((a - 1.0) ** 2 + b * b + c * c + (d - 1.0) ** 2)
    if dist <= tol.identity:
        return IsometryClass(Kind.IDENTITY)
    if dist < tol.ambiguous:
        raise AmbiguousClass(
            f"trace {g.trace:.17g} within {tol.classify:g} of 2 at distance {dist:.3e} from the identity"
        )
    # g = I + N with N nilpotent; b - c > 0 means N is a positive multiple of a
    # conjugate of [[0, 1], [0, 0]], which drags directions backwards.
    if b - c > 0:
        return IsometryClass(Kind.NEGATIVE_PARABOLIC)
    return IsometryClass(Kind.POSITIVE_PARABOLIC)


def theta(g: GroupElement, tol: Tolerances = DEFAULT_TOL) -> float:
    cls = classify(g, tol)
    if cls.kind is Kind.ELLIPTIC:
        return cls.angle
    if cls.kind in (Kind.HYPERBOLIC, Kind.POSITIVE_PARABOLIC):
        return 0.0
    return TWO_PI


def translation_length(g: GroupElement) -> float:
    t = abs(g.trace)
    if t <= 2.0:
        return 0.0
    return 2.0 * math.acosh(t / 2.0)


# ---------------------------------------------------------------------------
# Constructors


def _is_inf(z) -> bool:
    return z is None or (isinstance(z, (float, int)) and math.isinf(z)) or (
        isinstance(z, complex) and (math.isinf(z.real) or math.isinf(z.imag))
    )


def _affine_to(p: complex) -> GroupElement:
    """Orientation-preserving map sending i to p, namely ``z -> Im(p) z + Re(p)``."""
    s = math.sqrt(p.imag)
    return GroupElement.from_matrix((s, p.real / s, 0.0, 1.0 / s))


def rotation(center, angle: float) -> GroupElement:
    """Elliptic element fixing ``center`` with ``theta == angle`` (mod 2 pi).

    ``rotation(1j, a)`` is the matrix ``[[cos(a/2), -sin(a/2)], [sin(a/2), cos(a/2)]]``.
    """
    p = complex(center)
    if not p.imag > 0:
        raise InvalidCenter(f"center {center!r} is not in the open upper half-plane")
    h = _affine_to(p)
    s, co = math.sin(angle / 2.0), math.cos(angle / 2.0)
    r = GroupElement.from_matrix((co, -s, s, co))
    return r.conjugate_by(h)


def fixed_point_elliptic(g: GroupElement, tol: Tolerances = DEFAULT_TOL) -> complex:
    if classify(g, tol).kind is not Kind.ELLIPTIC:
        raise NotElliptic(f"{g!r} is not elliptic")
    a, b, c, d = g.entries
    disc = (d - a) ** 2 + 4.0 * b * c
    root = complex(0.0, math.sqrt(-disc)) if disc < 0 else complex(0.0, 0.0)
    z = ((a - d) + root) / (2.0 * c)
    if z.imag < 0:
        z = z.conjugate()
    return z


def reflection(p, q) -> AntiElement:
    """Reflection in the geodesic through ``p`` and ``q`` (points of H or its boundary, ``math.inf`` allowed)."""
    p_inf, q_inf = _is_inf(p), _is_inf(q)
    if p_inf and q_inf:
        raise DegenerateGeodesic("both endpoints are at infinity")
    if p_inf or q_inf:
        x0 = complex(q if p_inf else p).real
        return AntiElement.from_matrix((-1.0, 2.0 * x0, 0.0, 1.0))
    p, q = complex(p), complex(q)
    if p.imag < 0 or q.imag < 0:
        raise ValueError("points must lie in the closed upper half-plane")
    if abs(p - q) <= 1e-12:
        raise DegenerateGeodesic(f"points {p} and {q} coincide")
    dx = q.real - p.real
    if abs(dx) <= 1e-12 * max(1.0, abs(p), abs(q)):
        x0 = 0.5 * (p.real + q.real)
        return AntiElement.from_matrix((-1.0, 2.0 * x0, 0.0, 1.0))
    c0 = (abs(q) ** 2 - abs(p) ** 2) / (2.0 * dx)
    r2 = abs(p - c0) ** 2
    # inversion in the circle |z - c0| = r
    return AntiElement.from_matrix((c0, r2 - c0 * c0, 1.0, -c0))


def hyperbolic_distance(z: complex, w: complex) -> float:
    z, w = complex(z), complex(w)
    return math.acosh(1.0 + abs(z - w) ** 2 / (2.0 * z.imag * w.imag))


def disk_coordinate(center: complex, z: complex) -> complex:
    """Position of ``z`` in the Poincare disk centered at ``center``."""
    h = _affine_to(complex(center))
    w = h.inverse()(complex(z))
    return (w - 1j) / (w + 1j)


def rotation_angle_between(center: complex, z_from: complex, z_to: complex) -> float:
    """Angle ``s`` in [0, 2 pi) with ``rotation(center, s)(z_from) == z_to`` (for equidistant points)."""
    u = disk_coordinate(center, z_from)
    v = disk_coordinate(center, z_to)
    # rotation(center, s) multiplies the centered disk coordinate by exp(-i s)
    return (cmath.phase(u) - cmath.phase(v)) % TWO_PI


def affine_to(p: complex) -> GroupElement:
    return _affine_to(complex(p))
