from dataclasses import dataclass


@dataclass(frozen=True)
class Tolerances:
    """Numerical thresholds shared by the classification and relation checks.

    classify
        Band around ``|trace| == 2`` inside which an element is treated as
        parabolic or the identity.
    identity
        Frobenius distance to +-I below which a trace-2 element is the identity.
    ambiguous
        Frobenius distance to +-I below which (but above ``identity``) a
        trace-2 element cannot be told apart from the identity.
    relation
        Frobenius residual allowed in a product that should equal the identity.
    """

    classify: float = 1e-9
    identity: float = 1e-9
    ambiguous: float = 1e-6
    relation: float = 1e-7

    def __post_init__(self):
        for name in ("classify", "identity", "ambiguous", "relation"):
            if not getattr(self, name) > 0:
                raise ValueError(f"tolerance {name!r} must be positive")
        if self.ambiguous < self.identity:
            raise ValueError("ambiguous tolerance must be at least the identity tolerance")


DEFAULT_TOL = Tolerances()
