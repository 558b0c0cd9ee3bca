"""Representations of the punctured-sphere group into PSL(2,R).

The fundamental group of the n-punctured sphere is presented with peripheral
generators ``c_1, ..., c_n`` subject to ``c_1 c_2 ... c_n = 1``.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Iterable, List, Tuple

import numpy as np

from . import circle
from .errors import AmbiguousClass, MWViolation, RelationViolated
from .psl2 import (
    IDENTITY,
    STANDARD_REFLECTION,
    TWO_PI,
    GroupElement,
    Kind,
    classify,
    compose,
    psl_distance,
    theta,
)
from .tolerance import DEFAULT_TOL, Tolerances

log = logging.getLogger(__name__)

SNAP_EPS = 1e-9


@dataclass(frozen=True)
class SphereRep:
    gens: Tuple[GroupElement, ...]

    @property
    def n(self) -> int:
        return len(self.gens)

    def __getitem__(self, i):
        """1-based access to the image of ``c_i``."""
        if not 1 <= i <= self.n:
            raise IndexError(f"generator index {i} out of range 1..{self.n}")
        return self.gens[i - 1]

    def conjugate_by(self, h) -> "SphereRep":
        return SphereRep(tuple(g.conjugate_by(h) for g in self.gens))

    def relation_residual(self) -> float:
        return psl_distance(compose(self.gens), IDENTITY)

    def to_json(self) -> dict:
        return {"n": self.n, "generators": [g.to_list() for g in self.gens]}

    @classmethod
    def from_json(cls, data: dict, tol: Tolerances = DEFAULT_TOL) -> "SphereRep":
        gens = data["generators"]
        if "n" in data and int(data["n"]) != len(gens):
            raise ValueError(f"n={data['n']} but {len(gens)} generators given")
        return new_rep(gens, tol)


def new_rep(gens: Iterable, tol: Tolerances = DEFAULT_TOL) -> SphereRep:
    gens = tuple(g if isinstance(g, GroupElement) else GroupElement.from_matrix(g) for g in gens)
    if len(gens) < 3:
        raise ValueError(f"need at least 3 generators, got {len(gens)}")
    rep = SphereRep(gens)
    residual = rep.relation_residual()
    if residual > tol.relation:
        raise RelationViolated(residual)
    return rep


def trivial_rep(n: int) -> SphereRep:
    return new_rep([IDENTITY] * n)


def _exp_sl2(x, y, z) -> GroupElement:
    # X = [[x, y], [z, -x]], X^2 = q I
    q = x * x + y * z
    if q > 0:
        r = math.sqrt(q)
        ch, sh = math.cosh(r), math.sinh(r) / r
    elif q < 0:
        r = math.sqrt(-q)
        ch, sh = math.cos(r), math.sin(r) / r
    else:
        ch, sh = 1.0, 1.0
    return GroupElement.from_matrix((ch + sh * x, sh * y, sh * z, ch - sh * x))


def random_rep(n: int, rng: np.random.Generator, scale: float = 1.0) -> SphereRep:
    """Exponentials of Gaussian Lie algebra samples, closed up by the inverse product."""
    gens = [_exp_sl2(*(scale * rng.standard_normal(3))) for _ in range(n - 1)]
    gens.append(compose(gens).inverse())
    return SphereRep(tuple(gens))


def theta_vector(rep: SphereRep, tol: Tolerances = DEFAULT_TOL) -> List[float]:
    return [theta(g, tol) for g in rep.gens]


def relative_euler_class(rep: SphereRep, tol: Tolerances = DEFAULT_TOL) -> int:
    return circle.product_power(rep.gens, tol)


def volume(rep: SphereRep, tol: Tolerances = DEFAULT_TOL) -> float:
    return TWO_PI * relative_euler_class(rep, tol) - sum(theta_vector(rep, tol))


def mirror(rep: SphereRep) -> SphereRep:
    """Conjugate by the reflection ``z -> -conj(z)``."""
    return rep.conjugate_by(STANDARD_REFLECTION)


def nonhyperbolic_count(rep: SphereRep, tol: Tolerances = DEFAULT_TOL) -> int:
    """Elliptic and parabolic peripherals counted once, identity peripherals twice."""
    weights = {Kind.IDENTITY: 2, Kind.HYPERBOLIC: 0}
    return sum(weights.get(classify(g, tol).kind, 1) for g in rep.gens)


def _snap_ceil(x):
    r = round(x)
    return r if abs(x - r) <= SNAP_EPS else math.ceil(x)


def _snap_floor(x):
    r = round(x)
    return r if abs(x - r) <= SNAP_EPS else math.floor(x)


@dataclass(frozen=True)
class EulerReport:
    euler: int
    theta_vector: List[float]
    big_theta: float
    volume: float
    super_maximal: bool
    mw_lower: int
    mw_upper: int
    l: int = 0

    def to_json(self) -> dict:
        return {
            "euler": self.euler,
            "theta_vector": list(self.theta_vector),
            "big_theta": self.big_theta,
            "volume": self.volume,
            "super_maximal": self.super_maximal,
            "mw_lower": self.mw_lower,
            "mw_upper": self.mw_upper,
            "l": self.l,
        }


def milnor_wood_bounds(n: int, big_theta: float, l: int) -> Tuple[int, int]:
    chi = n - 2
    q = big_theta / TWO_PI
    return min(-chi + l, _snap_ceil(q)), max(chi, _snap_floor(q))


def euler_report(rep: SphereRep, tol: Tolerances = DEFAULT_TOL) -> EulerReport:
    thetas = theta_vector(rep, tol)
    big = sum(thetas)
    eu = relative_euler_class(rep, tol)
    l = nonhyperbolic_count(rep, tol)
    lo, hi = milnor_wood_bounds(rep.n, big, l)
    return EulerReport(
        euler=eu,
        theta_vector=thetas,
        big_theta=big,
        volume=TWO_PI * eu - big,
        super_maximal=eu in (rep.n - 1, rep.n),
        mw_lower=lo,
        mw_upper=hi,
        l=l,
    )


def check_milnor_wood(rep: SphereRep, tol: Tolerances = DEFAULT_TOL) -> EulerReport:
    """Euler report, raising ``MWViolation`` if the refined bounds fail."""
    report = euler_report(rep, tol)
    if not report.mw_lower <= report.euler <= report.mw_upper:
        raise MWViolation(
            f"euler {report.euler} outside [{report.mw_lower}, {report.mw_upper}] "
            f"(Theta/2pi = {report.big_theta / TWO_PI:.12g}, l = {report.l})"
        )
    return report


def pants_curve(rep: SphereRep, i: int) -> GroupElement:
    """Image of the pants curve ``b_i = c_{i+2} ... c_n``, i.e. ``(c_1 ... c_{i+1})^-1``."""
    if not 1 <= i <= rep.n - 3:
        raise IndexError(f"pants curve index {i} out of range 1..{rep.n - 3}")
    return compose(rep.gens[i + 1 :])


def restrict(rep: SphereRep, i: int) -> Tuple[SphereRep, SphereRep]:
    """Split along ``b_i`` into reps on ``(c_1..c_{i+1}, b_i)`` and ``(b_i^-1, c_{i+2}..c_n)``."""
    b = pants_curve(rep, i)
    left = SphereRep(rep.gens[: i + 1] + (b,))
    right = SphereRep((b.inverse(),) + rep.gens[i + 1 :])
    return left, right


def gluing_defect(g: GroupElement, tol: Tolerances = DEFAULT_TOL) -> int:
    """Euler class lost when gluing along a curve with image ``g``."""
    kind = classify(g, tol).kind
    if kind is Kind.IDENTITY:
        return 2
    if kind is Kind.HYPERBOLIC:
        return 0
    return 1


def is_super_maximal(rep: SphereRep, tol: Tolerances = DEFAULT_TOL) -> bool:
    return relative_euler_class(rep, tol) in (rep.n - 1, rep.n)


# ---------------------------------------------------------------------------
# Fuzzing


@dataclass
class FuzzReport:
    n: int
    trials: int
    seed: int
    checked: int = 0
    skipped: int = 0
    mw_violations: list = field(default_factory=list)
    mirror_violations: list = field(default_factory=list)
    euler_histogram: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.mw_violations and not self.mirror_violations

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "trials": self.trials,
            "seed": self.seed,
            "checked": self.checked,
            "skipped": self.skipped,
            "mw_violations": self.mw_violations,
            "mirror_violations": self.mirror_violations,
            "euler_histogram": {str(k): v for k, v in sorted(self.euler_histogram.items())},
        }


def fuzz_milnor_wood(
    n: int, trials: int, seed: int = 0, tol: Tolerances = DEFAULT_TOL, mirror_check: bool = True
) -> FuzzReport:
    """Check the refined Milnor-Wood bounds (and the mirror relation) on random reps."""
    rng = np.random.default_rng(seed)
    report = FuzzReport(n=n, trials=trials, seed=seed)
    for trial in range(trials):
        rep = random_rep(n, rng)
        try:
            er = euler_report(rep, tol)
            eu_bar = relative_euler_class(mirror(rep), tol) if mirror_check else None
        except AmbiguousClass as exc:
            log.info("trial %d skipped: %s", trial, exc)
            report.skipped += 1
            continue
        report.checked += 1
        report.euler_histogram[er.euler] = report.euler_histogram.get(er.euler, 0) + 1
        if not er.mw_lower <= er.euler <= er.mw_upper:
            report.mw_violations.append({"trial": trial, **rep.to_json(), **er.to_json()})
        if mirror_check and er.euler + eu_bar != er.l:
            report.mirror_violations.append(
                {"trial": trial, "euler": er.euler, "mirror_euler": eu_bar, "l": er.l, **rep.to_json()}
            )
    return report
