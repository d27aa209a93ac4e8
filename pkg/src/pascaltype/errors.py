"""Exception hierarchy.

Degenerate inputs raise instead of returning ``False`` so that "the condition
fails" is never confused with "the hypotheses of the condition fail".
"""


class PascalTypeError(Exception):
    pass


class DimensionError(PascalTypeError, ValueError):
    """Shapes, lengths or ambient dimensions do not match."""


class DegeneracyError(PascalTypeError):
    """A geometric construction is undefined for the given input."""


class RankError(DegeneracyError):
    pass


class ProjectionError(DegeneracyError):
    pass


class ContainmentError(DegeneracyError):
    pass


class HypothesisError(DegeneracyError):
    """Input violates a genericity hypothesis (e.g. general position)."""


class ResourceError(PascalTypeError):
    """A symbolic expansion exceeded its term ceiling."""


class GenerationError(PascalTypeError):
    """A seeded sampler exhausted its retries."""
