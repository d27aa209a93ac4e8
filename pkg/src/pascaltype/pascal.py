"""Six points on a conic versus three collinear derived points (the mystic hexagon).

Conventions: side ``L_i`` joins ``p_i`` and ``p_{i+1}`` (indices mod 6) and
the derived point ``q_j`` is ``L_j x L_{j+3}`` for ``j = 1, 2, 3``, with every
join and meet taken as a cross product of the raw coordinates.  ``G`` uses
those raw (quartic) coordinates; rescaling them to canonical form would
multiply ``G`` by an instance-dependent factor.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .errors import DegeneracyError, DimensionError
from .exact import Mat, det, rank
from .multipoly import DEFAULT_TERM_CEILING, MPoly, PolyMat, poly_det
from .projective import PPoint, cross, veronese2
from .results import IdentityProof

NVARS = 18


@dataclass(frozen=True)
class PascalInstance:
    points: tuple[PPoint, ...]

    def __init__(self, points: Sequence):
        pts = tuple(p if isinstance(p, PPoint) else PPoint(p) for p in points)
        if len(pts) != 6 or any(p.dim != 2 for p in pts):
            raise DimensionError("a hexagon is six points of P^2")
        object.__setattr__(self, "points", pts)

    def collinear_triples(self) -> list[tuple[int, int, int]]:
        return [idx for idx in combinations(range(6), 3)
                if rank(Mat.from_rows([self.points[i].vec for i in idx])) < 3]

    def no_three_collinear(self) -> bool:
        return not self.collinear_triples()


def _points(inst) -> tuple[PPoint, ...]:
    return inst.points if isinstance(inst, PascalInstance) else PascalInstance(inst).points


def conic_matrix(points: Sequence) -> Mat:
    return Mat.from_rows([veronese2(p) for p in points])


def pascal_F(inst) -> Fraction:
    """Determinant of the six conic-monomial rows; zero iff the points lie on a conic."""
    return det(conic_matrix(_points(inst)))


def derived_coords(p: Sequence[Sequence]) -> list[list]:
    """Raw coordinates of q_1, q_2, q_3 from six raw point vectors (ring-generic)."""
    sides = [cross(p[i], p[(i + 1) % 6]) for i in range(6)]
    return [cross(sides[j], sides[j + 3]) for j in range(3)]


def pascal_derived(inst) -> tuple[PPoint, PPoint, PPoint]:
    pts = _points(inst)
    vecs = [p.vec for p in pts]
    for i in range(6):
        if not any(cross(vecs[i], vecs[(i + 1) % 6])):
            raise DegeneracyError(f"side {i + 1} is undefined: p{i + 1} = p{(i + 1) % 6 + 1}")
    out = []
    for j, q in enumerate(derived_coords(vecs), 1):
        if not any(q):
            raise DegeneracyError(f"opposite sides L{j} and L{j + 3} coincide")
        out.append(PPoint(q))
    return tuple(out)


def pascal_G(inst) -> Fraction:
    """Determinant of the raw derived-point coordinates; zero iff q_1, q_2, q_3 are collinear."""
    pts = _points(inst)
    pascal_derived(pts)  # degeneracy check
    return det(Mat.from_rows(derived_coords([p.vec for p in pts])))


def symbolic_points() -> list[list[MPoly]]:
    """Six generic points, variables ordered x1, y1, z1, ..., x6, y6, z6."""
    xs = MPoly.variables(NVARS)
    return [xs[3 * i:3 * i + 3] for i in range(6)]


def symbolic_F(term_ceiling: int = DEFAULT_TERM_CEILING) -> MPoly:
    rows = []
    for x, y, z in symbolic_points():
        rows.append([x * x, y * y, z * z, x * y, x * z, y * z])
    return poly_det(PolyMat(rows, NVARS), term_ceiling)


def symbolic_G(term_ceiling: int = DEFAULT_TERM_CEILING) -> MPoly:
    return poly_det(PolyMat(derived_coords(symbolic_points()), NVARS), term_ceiling)


def pascal_identity(term_ceiling: int = DEFAULT_TERM_CEILING) -> IdentityProof:
    """Expand F and G in 18 variables and compare them term by term."""
    t0 = time.perf_counter()
    F = symbolic_F(term_ceiling)
    G = symbolic_G(term_ceiling)
    diff = F - G
    blocks = [range(3 * i, 3 * i + 3) for i in range(6)]
    stats = {
        "nvars": NVARS,
        "degree": F.total_degree(),
        "degree_G": G.total_degree(),
        "point_degrees": [F.degree_in(b) for b in blocks],
        "point_degrees_G": [G.degree_in(b) for b in blocks],
        "terms_F": len(F),
        "terms_G": len(G),
        "seconds": round(time.perf_counter() - t0, 3),
    }
    return IdentityProof(F, G, diff, diff.is_zero(), "symbolic", stats)
