"""Words for simple closed curves, the braid action, and the non-hyperbolicity audit."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .errors import InvalidRange
from .psl2 import IDENTITY, GroupElement, _mul, compose
from .rep import SphereRep

log = logging.getLogger(__name__)

MAX_WORD_LETTERS = 100_000
HYPERBOLIC_MARGIN = 1e-6


def free_reduce(letters: Sequence[int]) -> Tuple[int, ...]:
    out: List[int] = []
    for x in letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


@dataclass(frozen=True)
class Word:
    """Freely reduced product of ``c_i^{+-1}``, letters are signed 1-based indices."""

    letters: Tuple[int, ...] = ()

    def __post_init__(self):
        letters = tuple(int(x) for x in self.letters)
        if any(x == 0 for x in letters):
            raise ValueError("letter 0 is not a generator")
        object.__setattr__(self, "letters", free_reduce(letters))

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def inverse(self) -> "Word":
        return Word(tuple(-x for x in reversed(self.letters)))


def base_curve(i: int, j: int, n: Optional[int] = None) -> Word:
    """The curve ``c_i c_{i+1} ... c_j`` enclosing punctures ``i..j``."""
    if not 1 <= i <= j or (n is not None and j > n):
        raise InvalidRange(f"bad puncture range ({i}, {j})")
    if n is not None and (i, j) == (1, n):
        raise InvalidRange("the full product is trivial")
    return Word(tuple(range(i, j + 1)))


def all_base_curves(n: int) -> List[Tuple[int, int]]:
    return [(i, j) for i in range(1, n + 1) for j in range(i, n + 1) if (i, j) != (1, n)]


def _substitution(k: int, sign: int):
    if sign > 0:
        return {k: (k, k + 1, -k), k + 1: (k,)}
    return {k: (k + 1,), k + 1: (-(k + 1), k, k + 1)}


def braid_act(k: int, sign: int, w: Word) -> Word:
    """Apply the half twist exchanging punctures ``k`` and ``k+1`` (``sign=-1`` for its inverse)."""
    if k < 1:
        raise InvalidRange(f"braid index {k} must be positive")
    sub = _substitution(k, sign)
    out: List[int] = []
    for x in w.letters:
        img = sub.get(abs(x), (abs(x),))
        out.extend(img if x > 0 else tuple(-y for y in reversed(img)))
    return Word(tuple(out))


def evaluate(rep: SphereRep, w: Word) -> GroupElement:
    if any(abs(x) > rep.n for x in w.letters):
        raise IndexError(f"word uses a generator beyond n = {rep.n}")
    gens = rep.gens
    inv = [g.inverse() for g in gens]
    return compose([gens[x - 1] if x > 0 else inv[-x - 1] for x in w.letters]) if w.letters else IDENTITY


def braid_images(gens: Sequence[GroupElement], k: int, sign: int) -> List[GroupElement]:
    """Generator images of ``rep o braid``, so that ``evaluate(rep, braid_act(k, s, w)) == evaluate(new, w)``."""
    gens = list(gens)
    a, b = gens[k - 1], gens[k]
    if sign > 0:
        gens[k - 1], gens[k] = a @ b @ a.inverse(), a
    else:
        gens[k - 1], gens[k] = b, b.inverse() @ a @ b
    return gens


# ---------------------------------------------------------------------------
# Audit


def _adj(p):
    a, b, c, d = p
    return (d, -b, -c, a)


def _braided_trace(raw, curve, braids) -> float:
    """``|trace|`` of a braided base curve, on unnormalized matrices.

    Braiding can grow entries exponentially; skipping renormalization avoids
    spurious determinant failures, and any overflow shows up as a non-finite trace.
    """
    gens = list(raw)
    with np.errstate(all="ignore"):
        for k, s in braids:
            a, b = gens[k - 1], gens[k]
            if s > 0:
                gens[k - 1], gens[k] = _mul(_mul(a, b), _adj(a)), a
            else:
                gens[k - 1], gens[k] = b, _mul(_mul(_adj(b), a), b)
        i, j = curve
        out = (1.0, 0.0, 0.0, 1.0)
        for g in gens[i - 1 : j]:
            out = _mul(out, g)
    tr = abs(out[0] + out[3])
    return tr if math.isfinite(tr) else math.inf


@dataclass
class AuditReport:
    checked: int = 0
    skipped: int = 0
    violations: list = field(default_factory=list)
    warnings: list = field(default_factory=list)
    max_abs_trace: float = 0.0

    @property
    def ok(self):
        return not self.violations

    def merge(self, other: "AuditReport") -> "AuditReport":
        return AuditReport(
            checked=self.checked + other.checked,
            skipped=self.skipped + other.skipped,
            violations=self.violations + other.violations,
            warnings=self.warnings + other.warnings,
            max_abs_trace=max(self.max_abs_trace, other.max_abs_trace),
        )

    def to_json(self):
        return {
            "checked": self.checked,
            "skipped": self.skipped,
            "violations": self.violations,
            "warnings": self.warnings,
            "max_abs_trace": self.max_abs_trace,
        }


def curve_word(curve: Tuple[int, int], braids: Sequence[Tuple[int, int]]) -> Optional[Word]:
    """Word of ``braids[0] o braids[1] o ... (base_curve)``, or None past the letter cap."""
    w = base_curve(*curve)
    for k, s in reversed(braids):
        w = braid_act(k, s, w)
        if len(w) > MAX_WORD_LETTERS:
            return None
    return w


def audit_non_hyperbolic(
    rep: SphereRep, depth: int = 20, samples: int = 1000, seed: int = 0, margin: float = HYPERBOLIC_MARGIN
) -> AuditReport:
    """Look for simple closed curves with hyperbolic image.

    Every base curve is checked unbraided; the remaining samples apply a random
    braid of length at most ``depth`` to a random base curve. Braids act on the
    generator images directly, so word length never limits the depth.
    """
    n = rep.n
    rng = np.random.default_rng(seed)
    curves = all_base_curves(n)
    report = AuditReport()

    jobs = [(c, []) for c in curves]
    while len(jobs) < max(samples, len(curves)):
        length = int(rng.integers(0, depth + 1))
        ks = rng.integers(1, n, size=length)
        signs = rng.choice((-1, 1), size=length)
        curve = curves[int(rng.integers(len(curves)))]
        jobs.append((curve, [(int(k), int(s)) for k, s in zip(ks, signs)]))

    raw = [g.entries for g in rep.gens]
    for curve, braids in jobs:
        tr = _braided_trace(raw, curve, braids)
        if not math.isfinite(tr):
            log.info("curve %s under %d braids overflowed, skipped", curve, len(braids))
            report.skipped += 1
            continue
        i, j = curve
        report.checked += 1
        report.max_abs_trace = max(report.max_abs_trace, tr)
        if tr <= 2.0:
            continue
        entry = {"curve": [i, j], "braids": [list(b) for b in braids], "abs_trace": tr}
        if tr > 2.0 + margin:
            w = curve_word(curve, braids)
            if w is None:
                log.warning("violating word exceeds %d letters, not expanded", MAX_WORD_LETTERS)
            entry["word"] = list(w.letters) if w is not None else None
            report.violations.append(entry)
        else:
            report.warnings.append(entry)
    return report
