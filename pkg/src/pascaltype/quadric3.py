"""Quadric surfaces of P^3 through points, lines and sampled curves.

Every constraint is reduced to point conditions: a line contributes three of
its points (a quadric meeting a line in three points contains it) and a curve
contributes the sample points it carries.  A quadric exists iff the stacked
monomial rows have a nontrivial kernel.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DegeneracyError, DimensionError, HypothesisError, RankError
from .exact import Mat, det, dot, nullspace
from .multipoly import DEFAULT_TERM_CEILING, MPoly, PolyMat, poly_det
from .projective import (PLine, PPoint, apply, cross, frame_map, general_position,
                         project_all, quadric_monomial_index, quadric_monomials,
                         transversal_through_point)
from .results import IdentityProof

KINDS = ("point", "line", "curve_points")


@dataclass(frozen=True)
class QuadricConstraint:
    kind: str
    payload: object

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown constraint kind {self.kind!r}")
        if self.kind == "point" and not isinstance(self.payload, PPoint):
            object.__setattr__(self, "payload", PPoint(self.payload))
        elif self.kind == "line" and not isinstance(self.payload, PLine):
            a, b = self.payload
            object.__setattr__(self, "payload", PLine(a, b))
        elif self.kind == "curve_points":
            pts = tuple(p if isinstance(p, PPoint) else PPoint(p) for p in self.payload)
            if not pts:
                raise ValueError("curve_points constraint carries no points")
            object.__setattr__(self, "payload", pts)

    @classmethod
    def point(cls, p) -> QuadricConstraint:
        return cls("point", p)

    @classmethod
    def line(cls, line) -> QuadricConstraint:
        return cls("line", line if isinstance(line, PLine) else PLine(*line))

    @classmethod
    def curve_points(cls, points) -> QuadricConstraint:
        return cls("curve_points", points)

    def points(self) -> tuple[PPoint, ...]:
        if self.kind == "point":
            return (self.payload,)
        if self.kind == "line":
            return self.payload.sample_points()
        return self.payload

    @property
    def dim(self) -> int:
        return self.points()[0].dim


@dataclass(frozen=True)
class QuadricForm:
    """Coefficients over :func:`quadric_monomial_index` (squares first, then cross terms)."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if not any(self.coeffs):
            raise DegeneracyError("the zero form defines no quadric")

    @property
    def dim(self) -> int:
        n = 0
        while (n + 1) * (n + 2) // 2 < len(self.coeffs):
            n += 1
        return n

    def __call__(self, p) -> Fraction:
        return dot(self.coeffs, quadric_monomials(p.vec if isinstance(p, PPoint) else p))

    def contains(self, p) -> bool:
        return self(p) == 0


def quadric_system(constraints: Sequence[QuadricConstraint], dim: int = 3) -> Mat:
    """One row of degree-2 monomials per expanded point condition."""
    ncoef = (dim + 1) * (dim + 2) // 2
    rows = []
    for c in constraints:
        if not isinstance(c, QuadricConstraint):
            raise TypeError(f"expected QuadricConstraint, got {type(c).__name__}")
        for p in c.points():
            if p.dim != dim:
                raise DimensionError(f"constraint point {p} is not in P^{dim}")
            rows.append(quadric_monomials(p))
    return Mat(len(rows), ncoef, [x for r in rows for x in r])


def exists_quadric(constraints: Sequence[QuadricConstraint], dim: int = 3) -> tuple[bool, QuadricForm | None]:
    """Whether some quadric satisfies all constraints; the form is returned when it is unique."""
    kernel = nullspace(quadric_system(constraints, dim))
    if not kernel:
        return False, None
    if len(kernel) == 1:
        return True, QuadricForm(kernel[0])
    return True, None


def ten_points_det(points: Sequence) -> Fraction:
    pts = [p if isinstance(p, PPoint) else PPoint(p) for p in points]
    if len(pts) != 10 or any(p.dim != 3 for p in pts):
        raise DimensionError("ten points of P^3 required")
    return det(Mat.from_rows([quadric_monomials(p) for p in pts]))


# -- one point and three lines ------------------------------------------------

def p3l_rows(r: Sequence[Sequence]) -> list[list]:
    """The 6x6 matrix for P = e0 and lines L_i = line(e_i, R_i); ring-generic in the R_i coordinates.

    Columns are the six cross terms z0z1, z0z2, z0z3, z1z2, z1z3, z2z3.  The
    first three rows put R_i on the quadric; the last three ask the tangent
    plane at e_i to contain R_i.
    """
    rows = [[ri[0] * ri[1], ri[0] * ri[2], ri[0] * ri[3], ri[1] * ri[2], ri[1] * ri[3], ri[2] * ri[3]]
            for ri in r]
    r1, r2, r3 = r
    rows.append([r1[0], 0, 0, r1[2], r1[3], 0])
    rows.append([0, r2[0], 0, r2[1], 0, r2[3]])
    rows.append([0, 0, r3[0], 0, r3[1], r3[2]])
    return rows


def _frame_coords(R) -> list[tuple[Fraction, ...]]:
    if len(R) != 3:
        raise DimensionError("three points R1, R2, R3 required")
    out = [p.vec if isinstance(p, PPoint) else tuple(Fraction(x) for x in p) for p in R]
    if any(len(v) != 4 for v in out):
        raise DimensionError("R_i must be points of P^3")
    return out


def p3l_det(R1, R2, R3) -> Fraction:
    return det(Mat.from_rows(p3l_rows(_frame_coords([R1, R2, R3]))))


def p3l_factors(R1, R2, R3) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """The three coplanarity factors and the concurrency cubic, in printed order."""
    return _factors(_frame_coords([R1, R2, R3]))


def _factors(a):
    # a[i-1][j] is a_ij
    (a10, a11, a12, a13), (a20, a21, a22, a23), (a30, a31, a32, a33) = a
    return (a21 * a30 - a20 * a31,
            a12 * a30 - a10 * a32,
            -a13 * a20 + a10 * a23,
            a12 * a23 * a31 - a13 * a21 * a32)


def p3l_factorization_identity(term_ceiling: int = DEFAULT_TERM_CEILING) -> IdentityProof:
    """Expand the 6x6 determinant in the 12 coordinates a_ij and compare with the product of factors."""
    t0 = time.perf_counter()
    xs = MPoly.variables(12)
    a = [xs[4 * i:4 * i + 4] for i in range(3)]
    lhs = poly_det(PolyMat(p3l_rows(a), 12), term_ceiling)
    f1, f2, f3, f4 = _factors(a)
    rhs = f1 * f2 * f3 * f4
    diff = lhs - rhs
    blocks = [range(4 * i, 4 * i + 4) for i in range(3)]
    stats = {
        "nvars": 12,
        "degree": lhs.total_degree(),
        "block_degrees": [lhs.degree_in(b) for b in blocks],
        "homogeneous_blocks": all(lhs.is_homogeneous_in(b) for b in blocks),
        "terms": len(lhs),
        "seconds": round(time.perf_counter() - t0, 3),
    }
    return IdentityProof(lhs, rhs, diff, diff.is_zero(), "symbolic", stats)


def _line(x) -> PLine:
    return x if isinstance(x, PLine) else PLine(*x)


def p3l_concurrent(P, lines: Sequence) -> bool:
    """Do the images of the three lines under projection from P pass through one point?"""
    P = P if isinstance(P, PPoint) else PPoint(P)
    lines = [_line(l) for l in lines]
    if len(lines) != 3 or P.dim != 3 or any(l.dim != 3 for l in lines):
        raise DimensionError("one point and three lines of P^3 required")
    coeffs = []
    for l in lines:
        if l.contains(P):
            raise HypothesisError(f"{P} lies on {l}")
        a, b = project_all([P], [l.a, l.b])
        coeffs.append(cross(a.vec, b.vec))
    return det(Mat.from_rows(coeffs)) == 0


def p3l_frame(P, lines: Sequence) -> tuple[Mat, tuple[PPoint, PPoint, PPoint]]:
    """Move P to e0 and the first point of each line to e1, e2, e3; return the map and the images R_i."""
    P = P if isinstance(P, PPoint) else PPoint(P)
    lines = [_line(l) for l in lines]
    base = [l.a for l in lines]
    unit = [sum(x) for x in zip(P.vec, *(b.vec for b in base))]
    try:
        m = frame_map([P, *base, unit])
    except RankError as exc:
        raise HypothesisError(f"point and line base points are not in general position: {exc}") from None
    return m, tuple(apply(m, l.b) for l in lines)


def p3l_constraints(P, lines: Sequence) -> list[QuadricConstraint]:
    return [QuadricConstraint.point(P)] + [QuadricConstraint.line(_line(l)) for l in lines]


# -- four points and two lines -----------------------------------------------

def reduce_4p2l(points: Sequence, l1, l2) -> tuple[PPoint, tuple[PLine, PLine, PLine]]:
    """Replace p1, p2, p3 by their transversals to l1 and l2; p0 is kept."""
    pts = [p if isinstance(p, PPoint) else PPoint(p) for p in points]
    l1, l2 = _line(l1), _line(l2)
    if len(pts) != 4 or any(p.dim != 3 for p in pts):
        raise DimensionError("four points of P^3 required")
    if not general_position(pts):
        raise HypothesisError("the four points are not in general position")
    transversals = tuple(transversal_through_point(p, l1, l2) for p in pts[1:])
    # Meeting transversals (e.g. two of p1..p3 coplanar with l1) or p0 on a
    # transversal put the reduced problem on a degenerate factor, where the
    # two quadric conditions can disagree.
    for i, j in ((0, 1), (0, 2), (1, 2)):
        if transversals[i].meets(transversals[j]):
            raise HypothesisError(f"transversals through p{i + 1} and p{j + 1} meet")
    for i, t in enumerate(transversals, 1):
        if t.contains(pts[0]):
            raise HypothesisError(f"p0 lies on the transversal through p{i}")
    return pts[0], transversals


def constraints_4p2l(points: Sequence, l1, l2) -> list[QuadricConstraint]:
    return ([QuadricConstraint.point(p) for p in points]
            + [QuadricConstraint.line(_line(l1)), QuadricConstraint.line(_line(l2))])


__all__ = [
    "QuadricConstraint", "QuadricForm", "quadric_system", "exists_quadric", "ten_points_det",
    "p3l_rows", "p3l_det", "p3l_factors", "p3l_factorization_identity", "p3l_concurrent",
    "p3l_frame", "p3l_constraints", "reduce_4p2l", "constraints_4p2l", "quadric_monomial_index",
]
