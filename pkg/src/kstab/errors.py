"""Exception hierarchy shared by all kstab modules."""


class KStabError(Exception):
    """Base class for all errors raised by kstab."""


# -- polytope geometry -------------------------------------------------------

class EmptyInput(KStabError):
    pass


class DegeneratePolytope(KStabError):
    """The input does not span the ambient space (or is otherwise degenerate)."""


class OriginNotInterior(KStabError):
    """An operation requiring 0 in the interior of the polytope was called
    on a polytope that does not contain 0 in its interior."""


class NotReflexive(KStabError):
    """The polytope is not reflexive (some facet is not at lattice distance 1,
    or the vertices are not lattice points)."""


class FunctionUndefined(KStabError):
    """A piecewise-linear function with an empty piece list was supplied."""


class RedundantRay(KStabError):
    """A fan ray does not cut out a facet of the resulting polytope."""


class InvalidMultiplicity(KStabError):
    """A resolution component has multiplicity < 1."""


# -- numerics ----------------------------------------------------------------

class DimensionUnsupported(KStabError):
    """Quadrature is only implemented for dimensions 1 and 2."""


class OptimizationFailed(KStabError):
    """The convex-conjugate solver failed to meet its residual tolerance."""


class TailBoundFailure(KStabError):
    """The truncation radius required for the tail bound exceeds the hard cap."""


class CrossCheckFailed(KStabError):
    """Two independent evaluations of the same quantity disagree beyond
    tolerance."""


class MonotonicityViolation(KStabError):
    """The Ding slope decreased along the ray beyond tolerance, contradicting
    convexity; indicates a genuine failure, not a recoverable state."""


# -- database parsing --------------------------------------------------------

class PalpError(KStabError):
    """Base class for parse errors; carries the 1-based line offset."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class MalformedHeader(PalpError):
    pass


class MatrixShapeMismatch(PalpError):
    pass


class NonIntegerEntry(PalpError):
    pass
