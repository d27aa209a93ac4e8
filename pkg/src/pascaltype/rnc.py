"""Do d+4 points of P^d lie on a rational normal curve?

Two independent witnesses are computed.  The first moves the first d+2
points to the standard frame and evaluates one quartic equation per
``i = 0..d-2`` in the coordinates ``a`` and ``b`` of the last two points.
The second projects from spans of d-2 of the first d-1 points down to the
plane and evaluates the conic determinant of the six image points.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DimensionError, GenerationError, HypothesisError
from .exact import Mat, det, rank
from .multipoly import MPoly, poly_derivative, poly_eval
from .pascal import pascal_F
from .projective import PPoint, apply, frame_map, general_position, project_all
from .results import Verdict, fmt
from .rng import SeededRng, derive_seed

MAX_RETRIES = 100


@dataclass(frozen=True)
class RncInstance:
    d: int
    points: tuple[PPoint, ...]

    def __init__(self, d: int, points: Sequence):
        pts = tuple(p if isinstance(p, PPoint) else PPoint(p) for p in points)
        if d < 2:
            raise DimensionError("rational normal curves need d >= 2")
        if len(pts) != d + 4:
            raise DimensionError(f"expected {d + 4} points in P^{d}, got {len(pts)}")
        if any(p.dim != d for p in pts):
            raise DimensionError(f"all points must lie in P^{d}")
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "points", pts)

    def require_general_position(self) -> None:
        if not general_position(self.points):
            raise HypothesisError(f"the {self.d + 4} points are not in general position in P^{self.d}")

    def permuted(self, order: Sequence[int]) -> RncInstance:
        return RncInstance(self.d, [self.points[i] for i in order])


@dataclass(frozen=True)
class RncNormalForm:
    d: int
    a: tuple[Fraction, ...]
    b: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.a) != self.d + 1 or len(self.b) != self.d + 1:
            raise DimensionError(f"normal form coordinates must have length {self.d + 1}")


def normal_form(inst: RncInstance) -> RncNormalForm:
    d = inst.d
    m = frame_map(inst.points[:d + 2])
    a = apply(m, inst.points[d + 2])
    b = apply(m, inst.points[d + 3])
    return RncNormalForm(d, a.vec, b.vec)


def _quartic(ai, am, ad, bi, bm, bd):
    # am, bm: coordinate d-1
    return (ai * ad * bm * bd - am * ad * bi * bd
            - ai * am * bm * bd + am * ad * bi * bm
            + ai * am * bi * bd - ai * ad * bi * bm)


def rnc_equations(nf: RncNormalForm) -> tuple[Fraction, ...]:
    d = nf.d
    if d < 3:
        raise DimensionError("the quartic equations need d >= 3; use the conic determinant for d = 2")
    a, b = nf.a, nf.b
    return tuple(Fraction(_quartic(a[i], a[d - 1], a[d], b[i], b[d - 1], b[d])) for i in range(d - 1))


def equation_polys(d: int) -> list[MPoly]:
    """The d-1 equations as polynomials in (a_0..a_d, b_0..b_d)."""
    if d < 3:
        raise DimensionError("the quartic equations need d >= 3")
    xs = MPoly.variables(2 * d + 2)
    a, b = xs[:d + 1], xs[d + 1:]
    return [_quartic(a[i], a[d - 1], a[d], b[i], b[d - 1], b[d]) for i in range(d - 1)]


def rnc_affine_collinearity(nf: RncNormalForm, i: int) -> Fraction:
    d = nf.d
    if not 0 <= i <= d - 2:
        raise DimensionError(f"index {i} outside 0..{d - 2}")
    a, b = nf.a, nf.b
    return det(Mat.from_rows([
        [a[i] * a[d - 1], b[i] * b[d - 1], 1],
        [a[i] * a[d], b[i] * b[d], 1],
        [a[d - 1] * a[d], b[d - 1] * b[d], 1],
    ]))


def projection_values(inst: RncInstance, subset: Sequence[int] | None = None) -> tuple[Fraction, ...]:
    """Conic determinants of the d-1 planar projections.

    ``subset`` picks the d-1 points forming U (default: the first d-1).  For
    each ``u`` in U the centre is ``U - {u}`` and the six plane points are
    the images of ``u`` and of the five points outside U.
    """
    d = inst.d
    u_idx = list(range(d - 1)) if subset is None else list(subset)
    if len(u_idx) != d - 1:
        raise DimensionError(f"U must have {d - 1} points")
    rest = [k for k in range(d + 4) if k not in u_idx]
    values = []
    for u in u_idx:
        center = [inst.points[k] for k in u_idx if k != u]
        six = project_all(center, [inst.points[k] for k in [u] + rest])
        values.append(pascal_F(six))
    return tuple(values)


def rnc_check(inst: RncInstance) -> Verdict:
    t0 = time.perf_counter()
    if inst.d < 3:
        raise DimensionError("rnc_check needs d >= 3; for d = 2 use the conic determinant")
    inst.require_general_position()
    eqs = rnc_equations(normal_form(inst))
    proj = projection_values(inst)
    eq_zero = not any(eqs)
    proj_zero = not any(proj)
    return Verdict(
        command="rnc check",
        member=eq_zero and proj_zero,
        witnesses={
            "equations": [fmt(x) for x in eqs],
            "projection_conic_dets": [fmt(x) for x in proj],
        },
        timing_ms=(time.perf_counter() - t0) * 1e3,
        extra={"d": inst.d, "witnesses_agree": eq_zero == proj_zero},
    )


def moment_point(t: int, d: int) -> list[int]:
    return [t ** k for k in range(d + 1)]


def rnc_sample(d: int, seed: int, t_range: int = 20, entry_range: int = 5) -> RncInstance:
    """d+4 points on a random rational normal curve of P^d.

    Parameters ``t_k`` are distinct integers in ``[-t_range, t_range]`` pushed
    through ``t -> [1:t:...:t^d]`` and a random invertible integer matrix with
    entries in ``[-entry_range, entry_range]``.
    """
    if d < 2:
        raise DimensionError("rational normal curves need d >= 2")
    for attempt in range(MAX_RETRIES):
        rng = SeededRng(derive_seed(seed, attempt))
        ts = rng.sample_distinct(d + 4, -t_range, t_range)
        m = Mat(d + 1, d + 1, rng.vector((d + 1) ** 2, -entry_range, entry_range))
        if det(m) == 0:
            continue
        pts = [PPoint(m @ moment_point(t, d)) for t in ts]
        if general_position(pts):
            return RncInstance(d, pts)
    raise GenerationError(f"no general-position sample for d={d}, seed={seed} after {MAX_RETRIES} attempts")


def perturb(inst: RncInstance, point: int, coord: int, delta: int = 1) -> RncInstance:
    """Add ``delta`` to one coordinate of one point's canonical representative."""
    pts = list(inst.points)
    c = list(pts[point].coords)
    c[coord] += delta
    pts[point] = PPoint(c)
    return RncInstance(inst.d, pts)


def jacobian(nf: RncNormalForm) -> Mat:
    d = nf.d
    polys = equation_polys(d)
    point = list(nf.a) + list(nf.b)
    return Mat.from_rows([[poly_eval(poly_derivative(f, v), point) for v in range(2 * d + 2)]
                          for f in polys])


def rnc_jacobian_rank(nf: RncNormalForm) -> int:
    if any(rnc_equations(nf)):
        raise HypothesisError("the point does not satisfy the equations; the Jacobian rank is only meaningful on solutions")
    return rank(jacobian(nf))
