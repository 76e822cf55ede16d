"""Exception types shared across the toolkit."""


class SemialgError(Exception):
    """Base class for all toolkit errors."""


class NotPointed(SemialgError):
    """A nonzero nonnegative combination of the generators is zero."""


class InvalidPartition(SemialgError):
    """The requested E does not span the cone of all generators."""


class NotNumerical(SemialgError):
    """Operation requires a numerical semigroup (d = 1, positive, gcd 1)."""


class NotSimplicial(SemialgError):
    """Operation requires |E| = rank of the generator matrix."""


class NotCohenMacaulay(SemialgError):
    """Operation requires the semigroup algebra to be Cohen-Macaulay."""


class NotStandardGraded(SemialgError):
    """The toric ideal is not homogeneous for the standard grading."""


class PartitionNotConic(SemialgError):
    """Standard-monomial enumeration did not close (infinite staircase)."""


class TooManyVertices(SemialgError):
    """Simplicial-complex construction exceeds the vertex cap."""


class NotSublattice(SemialgError):
    """Second lattice is not contained in the first."""


class VerificationFailed(SemialgError):
    """Presentation verification found a mismatching degree."""

    def __init__(self, message, degree=None):
        super().__init__(message)
        self.degree = degree


class ParseError(SemialgError):
    """Malformed CLI or file input."""
