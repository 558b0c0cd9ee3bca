"""Super-maximal representations of punctured-sphere groups into PSL(2, R)."""

from .circle import LiftedElement, product_power, special_lift, translation_number
from .construct import ActionAngleCoords, AngleTriple, Orientation, necklace, sample_component, triangle_pants
from .curves import Word, audit_non_hyperbolic, base_curve, braid_act, evaluate
from .errors import SupermaximalError
from .psl2 import GroupElement, IsometryClass, Kind, classify, reflection, rotation, theta
from .rep import (
    SphereRep,
    check_milnor_wood,
    euler_report,
    fuzz_milnor_wood,
    mirror,
    new_rep,
    relative_euler_class,
    trivial_rep,
)
from .symplectic import delzant_polytope, moment_map, symplectic_volume, twist_flow
from .tolerance import DEFAULT_TOL, Tolerances

__version__ = "0.1.0"

__all__ = [
    "ActionAngleCoords",
    "AngleTriple",
    "DEFAULT_TOL",
    "GroupElement",
    "IsometryClass",
    "Kind",
    "LiftedElement",
    "Orientation",
    "SphereRep",
    "SupermaximalError",
    "Tolerances",
    "Word",
    "audit_non_hyperbolic",
    "base_curve",
    "braid_act",
    "check_milnor_wood",
    "classify",
    "delzant_polytope",
    "euler_report",
    "evaluate",
    "fuzz_milnor_wood",
    "mirror",
    "moment_map",
    "necklace",
    "new_rep",
    "product_power",
    "reflection",
    "relative_euler_class",
    "rotation",
    "sample_component",
    "special_lift",
    "symplectic_volume",
    "theta",
    "translation_number",
    "triangle_pants",
    "trivial_rep",
    "twist_flow",
]
