"""Exception types shared across the package."""


class MonadcalcError(Exception):
    """Base class for all domain errors raised by monadcalc."""


class DimensionMismatch(MonadcalcError):
    pass


class NonSquareMatrix(MonadcalcError):
    pass


class SingularMatrix(MonadcalcError):
    pass


class SingularGroupElement(MonadcalcError):
    """A group action was requested with a non-invertible element."""


class NonCommuting(MonadcalcError):
    """Simultaneous triangularization needs a pairwise commuting family."""


class IrrationalSpectrum(MonadcalcError):
    """A characteristic polynomial does not split over Q(i).

    Exact eigenvalue extraction is impossible; callers may fall back to
    the floating-point mode where one is provided.
    """


class IntegrabilityViolation(MonadcalcError):
    """Raised by validators; carries the nonzero defect matrix."""

    def __init__(self, defect):
        super().__init__("integrability condition violated")
        self.defect = defect


class SurjectivityViolation(MonadcalcError):
    """Blowup data where [a1 | a2 | b] fails to be surjective."""

    def __init__(self, cokernel_dim):
        super().__init__(f"surjectivity condition violated (cokernel dim {cokernel_dim})")
        self.cokernel_dim = cokernel_dim


class PointOnExceptionalLine(MonadcalcError):
    """Operation defined only away from the exceptional line."""


class OverlapViolation(MonadcalcError):
    """Transition data requested outside the chart overlap (alpha2 = 0)."""


class InfeasibleSpec(MonadcalcError):
    """An instance-generator family cannot be realized with the given k, r."""


class DocumentError(MonadcalcError):
    """Malformed instance document (JSON shape, rational syntax, dimensions)."""
