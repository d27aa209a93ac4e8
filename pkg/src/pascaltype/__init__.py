"""Exact determinantal conditions of Pascal type.

Conics through six points, rational normal curves through d+4 points,
quadric surfaces of P^3 through points and lines, and quadric threefolds of
P^4 through five lines, each with the polynomial identity relating the
existence determinant to a derived incidence determinant.
"""

from .errors import (ContainmentError, DegeneracyError, DimensionError, GenerationError,
                     HypothesisError, PascalTypeError, ProjectionError, RankError, ResourceError)
from .exact import Mat, det, nullspace, rank
from .multipoly import MPoly, PolyMat, poly_derivative, poly_det, poly_eval, poly_mul
from .projective import Hyperplane, PLine, PPoint
from .results import IdentityProof, Verdict

__version__ = "0.1.0"

__all__ = [
    "ContainmentError", "DegeneracyError", "DimensionError", "GenerationError", "HypothesisError",
    "PascalTypeError", "ProjectionError", "RankError", "ResourceError",
    "Mat", "det", "nullspace", "rank",
    "MPoly", "PolyMat", "poly_derivative", "poly_det", "poly_eval", "poly_mul",
    "Hyperplane", "PLine", "PPoint", "IdentityProof", "Verdict",
]
