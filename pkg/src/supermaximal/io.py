"""JSON persistence for representations and report rendering helpers."""

from __future__ import annotations

import json
import math
import re
from pathlib import Path
from typing import List

from .rep import SphereRep
from .tolerance import DEFAULT_TOL, Tolerances

_ANGLE = re.compile(r"^\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*(pi)?\s*$")


def parse_angle(text: str) -> float:
    """Radians, or a multiple of pi written with a ``pi`` suffix (``1.8pi``, ``pi``)."""
    m = _ANGLE.match(text)
    if not m or (m.group(1) is None and m.group(2) is None):
        raise ValueError(f"cannot parse angle {text!r}")
    value = float(m.group(1)) if m.group(1) is not None else 1.0
    return value * math.pi if m.group(2) else value


def parse_angles(text: str) -> List[float]:
    text = text.strip()
    if not text:
        return []
    return [parse_angle(part) for part in text.split(",")]


def sig(x: float, digits: int = 12) -> float:
    return float(f"{x:.{digits}g}")


def render_angle(x: float) -> dict:
    return {"rad": sig(x), "pi": sig(x / math.pi)}


def read_rep(path, tol: Tolerances = DEFAULT_TOL) -> SphereRep:
    with open(path, encoding="utf-8") as fh:
        return SphereRep.from_json(json.load(fh), tol)


def dumps(payload) -> str:
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False)


def write_rep(rep: SphereRep, path) -> None:
    Path(path).write_text(dumps(rep.to_json()) + "\n", encoding="utf-8")
