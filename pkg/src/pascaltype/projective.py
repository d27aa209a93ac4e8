"""Points, lines and hyperplanes of P^n over Q.

Constructors canonicalise to coprime integer coordinates with the first
nonzero coordinate positive.  Several helpers (``cross``,
``hyperplane_coeffs``, ``meet_coords``) are written against plain sequences
and only use ring operations, so the identity proofs can run them on
:class:`~pascaltype.multipoly.MPoly` entries to obtain the exact
minor-based representatives.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import gcd, lcm
from typing import Sequence

from .errors import ContainmentError, DegeneracyError, DimensionError, ProjectionError, RankError
from .exact import Mat, dot, inverse, rank, scalar, solve
from .multipoly import cofactor_det


def canonical_coords(coords: Sequence) -> tuple[int, ...]:
    v = [scalar(x) for x in coords]
    if not any(v):
        raise DegeneracyError("the zero vector is not a projective point")
    den = lcm(*(x.denominator for x in v))
    ints = [int(x * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    ints = [x // g for x in ints]
    if next(x for x in ints if x) < 0:
        ints = [-x for x in ints]
    return tuple(ints)


class PPoint:
    """A point of P^n, stored by its canonical integer representative."""

    __slots__ = ("coords",)

    def __init__(self, coords: Sequence):
        self.coords = canonical_coords(coords)

    @property
    def dim(self) -> int:
        return len(self.coords) - 1

    @property
    def vec(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(x) for x in self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __len__(self) -> int:
        return len(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __eq__(self, other) -> bool:
        return isinstance(other, PPoint) and self.coords == other.coords

    def __hash__(self) -> int:
        return hash(("PPoint", self.coords))

    def __repr__(self) -> str:
        return "[" + ":".join(map(str, self.coords)) + "]"


class Hyperplane:
    """Zero set of a linear form; coefficients canonicalised like a point."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence):
        self.coeffs = canonical_coords(coeffs)

    @property
    def dim(self) -> int:
        return len(self.coeffs) - 1

    def value(self, p) -> Fraction:
        return dot(self.coeffs, _vec(p))

    def contains(self, p) -> bool:
        return self.value(p) == 0

    def __eq__(self, other) -> bool:
        return isinstance(other, Hyperplane) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("Hyperplane", self.coeffs))

    def __repr__(self) -> str:
        return f"Hyperplane({list(self.coeffs)})"


class PLine:
    """The line through two distinct points, kept as the point pair."""

    __slots__ = ("a", "b")

    def __init__(self, a, b):
        a = a if isinstance(a, PPoint) else PPoint(a)
        b = b if isinstance(b, PPoint) else PPoint(b)
        if a.dim != b.dim:
            raise DimensionError("line endpoints live in different spaces")
        if a == b:
            raise DegeneracyError(f"a line needs two distinct points, got {a} twice")
        self.a = a
        self.b = b

    @property
    def dim(self) -> int:
        return self.a.dim

    def sample_points(self) -> tuple[PPoint, PPoint, PPoint]:
        """Three distinct points: a, b and a+b on the canonical representatives."""
        return self.a, self.b, PPoint([x + y for x, y in zip(self.a, self.b)])

    def contains(self, p) -> bool:
        return rank(Mat.from_rows([self.a.vec, self.b.vec, _vec(p)])) < 3

    def meets(self, other: PLine) -> bool:
        return span_rank([self.a, self.b, other.a, other.b]) < 4

    def plucker(self) -> tuple[int, ...]:
        """2x2 minors p_ij = a_i b_j - a_j b_i for i < j, lexicographic."""
        a, b = self.a.coords, self.b.coords
        return tuple(a[i] * b[j] - a[j] * b[i] for i, j in combinations(range(len(a)), 2))

    def __eq__(self, other) -> bool:
        return isinstance(other, PLine) and self.plucker_point() == other.plucker_point()

    def plucker_point(self) -> PPoint:
        return PPoint(self.plucker())

    def __hash__(self) -> int:
        return hash(("PLine", self.plucker_point()))

    def __repr__(self) -> str:
        return f"PLine({self.a}, {self.b})"


def _vec(p) -> tuple[Fraction, ...]:
    if isinstance(p, PPoint):
        return p.vec
    return tuple(scalar(x) for x in p)


def _same_dim(points) -> int:
    dims = {len(p) for p in points}
    if len(dims) > 1:
        raise DimensionError(f"points of mixed dimensions {sorted(d - 1 for d in dims)}")
    return dims.pop() - 1 if dims else -1


def span_rank(points) -> int:
    """Vector-space rank of the representatives (projective span dimension + 1)."""
    if not points:
        return 0
    _same_dim(points)
    return rank(Mat.from_rows([_vec(p) for p in points]))


def general_position(points: Sequence) -> bool:
    """No ``k <= n+1`` of the points are linearly dependent."""
    n = _same_dim(points)
    if not points:
        return True
    vecs = [_vec(p) for p in points]
    size = min(len(vecs), n + 1)
    return all(rank(Mat.from_rows(sub)) == size for sub in combinations(vecs, size))


def cross(u: Sequence, v: Sequence) -> list:
    """Cross product: the line through two points of P^2, or the meet of two lines."""
    return [u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0]]


def hyperplane_coeffs(rows: Sequence[Sequence]) -> list:
    """Signed maximal minors of an ``n x (n+1)`` matrix.

    ``h[k] = (-1)^(n+k) * det(rows without column k)``, so that
    ``sum h[k] x[k] = det(rows + [x])``.  Ring-generic.
    """
    n = len(rows)
    if any(len(r) != n + 1 for r in rows):
        raise DimensionError(f"need an {n}x{n + 1} matrix")
    h = []
    for k in range(n + 1):
        minor = cofactor_det([list(r[:k]) + list(r[k + 1:]) for r in rows])
        h.append(-minor if (n + k) % 2 else minor)
    return h


def meet_coords(a: Sequence, b: Sequence, h: Sequence) -> list:
    """``(h.b) a - (h.a) b``: the point where line(a, b) meets hyperplane h.  Ring-generic."""
    hb = _ring_dot(h, b)
    ha = _ring_dot(h, a)
    return [hb * x - ha * y for x, y in zip(a, b)]


def _ring_dot(u, v):
    total = 0
    for x, y in zip(u, v):
        if x and y:
            total = x * y + total
    return total


def span_hyperplane(points: Sequence) -> Hyperplane:
    n = _same_dim(points)
    if len(points) != n:
        raise DimensionError(f"a hyperplane of P^{n} is spanned by {n} points, got {len(points)}")
    h = hyperplane_coeffs([_vec(p) for p in points])
    if not any(h):
        raise RankError("points are dependent and do not span a hyperplane")
    return Hyperplane(h)


def line_hyperplane_meet(line: PLine, h: Hyperplane) -> PPoint:
    if line.dim != h.dim:
        raise DimensionError("line and hyperplane live in different spaces")
    coords = meet_coords(line.a.vec, line.b.vec, [Fraction(c) for c in h.coeffs])
    if not any(coords):
        raise ContainmentError(f"{line} lies inside {h}")
    return PPoint(coords)


def completion_columns(center: Sequence[Sequence[Fraction]], size: int) -> list[int]:
    """Indices of the coordinate vectors completing ``center`` to a basis, smallest first."""
    chosen: list[Sequence] = list(center)
    cols: list[int] = []
    r = len(chosen)
    for i in range(size):
        if r == size:
            break
        e = tuple(Fraction(int(j == i)) for j in range(size))
        if rank(Mat.from_rows(chosen + [e])) > r:
            chosen.append(e)
            cols.append(i)
            r += 1
    return cols


def projection_matrix(center: Sequence) -> Mat:
    """Linear map realising the projection from span(center).

    The center is completed to a basis by the coordinate vectors of smallest
    index that keep full rank; the returned ``(n+1-k) x (n+1)`` matrix gives
    the trailing coordinates in that basis.
    """
    vecs = [_vec(c) for c in center]
    n = _same_dim(vecs) if vecs else None
    if n is None:
        raise DimensionError("an empty center has no ambient dimension; pass the point directly")
    k = len(vecs)
    if rank(Mat.from_rows(vecs)) < k:
        raise RankError("projection center points are dependent")
    size = n + 1
    cols = completion_columns(vecs, size)
    basis = vecs + [tuple(Fraction(int(j == i)) for j in range(size)) for i in cols]
    change = inverse(Mat.from_rows(basis).transpose())
    return Mat.from_rows([change.row(i) for i in range(k, size)])


def project_from_span(center: Sequence, p) -> PPoint:
    return project_all(center, [p])[0]


def project_all(center: Sequence, points: Sequence) -> list[PPoint]:
    """Project several points from the same center (one basis change)."""
    vecs = [_vec(p) for p in points]
    if not center:
        return [PPoint(v) for v in vecs]
    size = len(_vec(center[0]))
    if any(len(v) != size for v in vecs):
        raise DimensionError("center and point live in different spaces")
    m = projection_matrix(center)
    out = []
    for v in vecs:
        image = m @ v
        if not any(image):
            raise ProjectionError(f"{PPoint(v)} lies in the projection center")
        out.append(PPoint(image))
    return out


def veronese2(p) -> tuple[Fraction, ...]:
    """Conic monomials in the order x^2, y^2, z^2, xy, xz, yz."""
    v = _vec(p)
    if len(v) != 3:
        raise DimensionError(f"veronese2 needs a point of P^2, got P^{len(v) - 1}")
    x, y, z = v
    return (x * x, y * y, z * z, x * y, x * z, y * z)


def quadric_monomial_index(n: int) -> list[tuple[int, int]]:
    """Index pairs of the degree-2 monomials of P^n: squares ascending, then z_i z_j (i<j) lexicographic."""
    return [(i, i) for i in range(n + 1)] + list(combinations(range(n + 1), 2))


def quadric_monomials(p) -> tuple:
    v = p.vec if isinstance(p, PPoint) else tuple(p)
    return tuple(v[i] * v[j] for i, j in quadric_monomial_index(len(v) - 1))


def frame_map(points: Sequence) -> Mat:
    """Projectivity sending ``points[k]`` to ``e_k`` (k <= n) and ``points[n+1]`` to the all-ones point.

    Normalised so the first nonzero entry of the matrix is 1.
    """
    n = _same_dim(points)
    if len(points) != n + 2:
        raise DimensionError(f"a frame of P^{n} has {n + 2} points, got {len(points)}")
    vecs = [_vec(p) for p in points]
    basis = Mat.from_rows(vecs[:n + 1]).transpose()
    try:
        lam = solve(basis, vecs[n + 1])
    except RankError:
        raise RankError("the first n+1 frame points are dependent") from None
    if not all(lam):
        raise RankError("frame points are not in general position")
    scaled = Mat.from_rows([[basis[i, j] * lam[j] for j in range(n + 1)] for i in range(n + 1)])
    m = inverse(scaled)
    lead = next(x for x in m.entries if x)
    return m.scale(1 / lead)


def apply(m: Mat, p) -> PPoint:
    return PPoint(m @ _vec(p))


def plane_through(p, line: PLine) -> Hyperplane:
    """Plane of P^3 spanned by a point and a line."""
    try:
        return span_hyperplane([p, line.a, line.b])
    except RankError:
        raise DegeneracyError(f"{p} lies on {line}") from None


def transversal_through_point(p, l1: PLine, l2: PLine) -> PLine:
    """The unique line through ``p`` meeting two skew lines of P^3."""
    p = p if isinstance(p, PPoint) else PPoint(p)
    if p.dim != 3 or l1.dim != 3 or l2.dim != 3:
        raise DimensionError("transversals are constructed in P^3")
    if l1.meets(l2):
        raise DegeneracyError("the two lines are coplanar")
    h1 = plane_through(p, l1)
    h2 = plane_through(p, l2)
    if h1 == h2:
        raise DegeneracyError("the planes through the point and each line coincide")
    on_l1 = line_hyperplane_meet(l1, h2)
    on_l2 = line_hyperplane_meet(l2, h1)
    line = PLine(on_l1, on_l2)
    if not line.contains(p):
        raise DegeneracyError("the transversal misses the point")
    return line
