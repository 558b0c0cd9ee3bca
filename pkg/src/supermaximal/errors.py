"""Exception hierarchy.

Every error carries a short machine-readable ``code`` that the command line
front end reports verbatim.
"""


class SupermaximalError(Exception):
    code = "error"


class AmbiguousClass(SupermaximalError, ArithmeticError):
    """Trace is within tolerance of 2 and the element is too close to +-I to tell parabolic from identity."""

    code = "ambiguous_class"


class InvalidCenter(SupermaximalError, ValueError):
    code = "invalid_center"


class DegenerateGeodesic(SupermaximalError, ValueError):
    code = "degenerate_geodesic"


class NotElliptic(SupermaximalError, ValueError):
    code = "not_elliptic"


class RelationViolated(SupermaximalError, ValueError):
    code = "relation_violated"

    def __init__(self, residual, msg=None):
        self.residual = residual
        super().__init__(msg or f"product of generators is not the identity (residual {residual:.3e})")


class InconsistentWinding(SupermaximalError, ArithmeticError):
    code = "inconsistent_winding"


class MWViolation(SupermaximalError, AssertionError):
    """Raised when a computed Euler class escapes the Milnor-Wood bounds. Always a bug."""

    code = "mw_violation"


class InvalidAngles(SupermaximalError, ValueError):
    code = "invalid_angles"


class PolytopeViolation(SupermaximalError, ValueError):
    code = "polytope_violation"


class GluingFailure(SupermaximalError, ArithmeticError):
    code = "gluing_failure"


class EmptyPolytope(SupermaximalError, ValueError):
    code = "empty_polytope"


class InvalidRange(SupermaximalError, ValueError):
    code = "invalid_range"


class NonEllipticPantsCurve(SupermaximalError, ValueError):
    code = "non_elliptic_pants_curve"

    def __init__(self, index, msg=None):
        self.index = index
        super().__init__(msg or f"image of pants curve b_{index} is not elliptic")


class DegenerateSimplex(SupermaximalError, ArithmeticError):
    code = "degenerate_simplex"
