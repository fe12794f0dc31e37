"""Exception hierarchy.

Every domain error raised by this package derives from RootCensusError,
so callers (and the CLI) can distinguish bad inputs and exhausted
budgets from genuine bugs.
"""


class RootCensusError(Exception):
    """Base class for all domain errors raised by rootcensus."""


class ZeroPolynomial(RootCensusError):
    """The zero polynomial was passed where a nonzero one is required."""


class ZeroConstantTerm(RootCensusError):
    """Operation needs a nonzero constant term (e.g. reciprocal)."""


class DegreeTooSmall(RootCensusError):
    """Polynomial degree below the operation's minimum."""


class DegreeCapExceeded(RootCensusError):
    """Polynomial degree above the configured cap for this operation."""


class EndpointIsRoot(RootCensusError):
    """A Sturm count was requested on an interval whose endpoint is a root."""


class PrecisionCapExceeded(RootCensusError):
    """Certification failed to converge below the precision cap.

    Carries the best uncertified result so far in ``partial`` when one
    exists.
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class GammaTooLarge(RootCensusError):
    """Perturbation radius gamma is not below half the minimal root gap."""


class TargetNotSeparated(RootCensusError):
    """Target points could not be certified pairwise distinct."""


class HTooSmall(RootCensusError):
    """Height parameter too small for any family member to exist."""


class EmptyRegion(RootCensusError):
    """Family parameter region contains no integer points."""


class BadParameters(RootCensusError):
    """Family or spec parameters violate their documented constraints."""


class EmptyStream(RootCensusError):
    """A polynomial stream to validate produced no elements."""


class EmptyInput(RootCensusError):
    """A report was requested over an empty collection of tables."""


class NotIrreducible(RootCensusError):
    """Certified-irreducible input required but certification failed."""


class SpecMismatch(RootCensusError):
    """Census tables with different spec fingerprints cannot merge."""


class InsufficientPoints(RootCensusError):
    """Growth-exponent fit needs at least three data points."""


class NonpositiveCount(RootCensusError):
    """Growth-exponent fit received a count <= 0 (log undefined)."""


class BudgetExceeded(RootCensusError):
    """Requested census exceeds the configured work budget."""


class CheckpointCorrupt(RootCensusError):
    """Checkpoint file failed checksum or structural validation."""


class AmbiguousClassification(RootCensusError):
    """A census in strict mode met a polynomial it could not certify."""
