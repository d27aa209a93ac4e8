from fractions import Fraction

import pytest

from oracles import oracle_kernel, proportional
from pascaltype.errors import DegeneracyError, DimensionError, HypothesisError
from pascaltype.exact import Mat, det, nullspace, rank
from pascaltype.projective import PLine, PPoint, apply, quadric_monomials
from pascaltype.quadric3 import (QuadricConstraint, constraints_4p2l, exists_quadric, p3l_concurrent,
                                 p3l_constraints, p3l_det, p3l_factors, p3l_factorization_identity,
                                 p3l_frame, quadric_system, reduce_4p2l, ten_points_det)
from pascaltype.rng import SeededRng, derive_seed

E = [tuple(int(j == i) for j in range(4)) for i in range(4)]
SEGRE = (0, 0, 0, 0, 0, 0, 1, -1, 0, 0)  # x0x3 - x1x2 over squares then x_i x_j (i<j)


def segre_point(s, t, u, v):
    return PPoint([s * u, s * v, t * u, t * v])


def segre_ruling(s, t):
    """The line {[s:t]} x P^1 of the Segre quadric."""
    return PLine([s, 0, t, 0], [0, s, 0, t])


def random_points(rng, k, box=9):
    return [rng.vector(4, -box, box) for _ in range(k)]


def test_segre_coefficient_vector():
    for p in [segre_point(2, 3, -1, 5), segre_point(1, 0, 4, 7)]:
        assert sum(c * m for c, m in zip(SEGRE, quadric_monomials(p))) == 0


def test_system_shapes():
    p = PPoint([1, 2, 0, 1])
    m = quadric_system([QuadricConstraint.point(p)])
    assert (m.rows, m.cols) == (1, 10) and m.row(0) == quadric_monomials(p)
    m = quadric_system([QuadricConstraint.line(([1, 2, 3, 4], [0, 1, -1, 2]))])
    assert m.rows == 3 and rank(m) <= 3
    rng = SeededRng(1)
    pts = [segre_point(*rng.vector(4, -5, 5)) for _ in range(10)]
    m = quadric_system([QuadricConstraint.point(p) for p in pts])
    assert rank(m) <= 9
    with pytest.raises(DimensionError):
        quadric_system([QuadricConstraint.point([1, 2, 3])])


def test_exists_examples():
    rng = SeededRng(3)
    pts = random_points(rng, 9)
    ok, form = exists_quadric([QuadricConstraint.point(p) for p in pts])
    assert ok and form is not None
    assert all(form.contains(p) for p in pts)
    kernel = oracle_kernel([list(quadric_monomials(PPoint(p))) for p in pts], 10)
    assert len(kernel) == 1
    assert proportional(kernel[0], form.coeffs)
    ok, form = exists_quadric([QuadricConstraint.point(p) for p in pts + random_points(rng, 1)])
    assert not ok and form is None
    assert exists_quadric([]) == (True, None)


def test_ten_points_examples():
    rng = SeededRng(4)
    segre = [segre_point(*rng.vector(4, -6, 6)) for _ in range(10)]
    assert ten_points_det(segre) == 0
    pts = random_points(rng, 10)
    assert ten_points_det(pts) != 0
    value = det(Mat.from_rows([quadric_monomials([Fraction(x) for x in p]) for p in pts]))
    scaled = [list(p) for p in pts]
    scaled[3] = [3 * x for x in scaled[3]]
    rows = [quadric_monomials([Fraction(x) for x in p]) for p in scaled]
    assert det(Mat.from_rows(rows)) == 9 * value


def test_line_rowspace_invariance():
    rng = SeededRng(6)
    for _ in range(10):
        a, b = random_points(rng, 2)
        others = [QuadricConstraint.point(p) for p in random_points(rng, 5)]
        base = quadric_system(others + [QuadricConstraint.line((a, b))])
        alt_pts = [a, b, [2 * x + 5 * y for x, y in zip(a, b)]]
        alt = quadric_system(others + [QuadricConstraint.curve_points(alt_pts)])
        k1, k2 = nullspace(base), nullspace(alt)
        assert len(k1) == len(k2)
        assert rank(Mat.from_rows(k1 + k2)) == len(k1)


def test_projective_invariance_of_existence():
    rng = SeededRng(9)
    for s in range(10):
        m = Mat(4, 4, rng.vector(16, -3, 3))
        if det(m) == 0:
            continue
        lines = [segre_ruling(*rng.vector(2, -4, 4)) for _ in range(2)]
        pts = [segre_point(*rng.vector(4, -4, 4)) for _ in range(3)]
        if s % 2:
            pts.append(PPoint(random_points(rng, 1)[0]))
        try:
            cons = [QuadricConstraint.point(p) for p in pts] + [QuadricConstraint.line(l) for l in lines]
        except DegeneracyError:
            continue
        moved = ([QuadricConstraint.point(apply(m, p)) for p in pts]
                 + [QuadricConstraint.line(PLine(apply(m, l.a), apply(m, l.b))) for l in lines])
        assert exists_quadric(cons)[0] == exists_quadric(moved)[0]


def test_p3l_examples():
    R = ([1, 5, 1, 1], [1, 1, 7, 1], [1, 2, 2, 9])
    assert p3l_det(*R) == 0
    assert p3l_factors(*R)[3] == 0
    lines = [PLine(E[i + 1], R[i]) for i in range(3)]
    assert p3l_concurrent(E[0], lines)
    R = ([1, 1, 1, 2], [1, 2, 1, 1], [1, 1, 2, 1])
    f = p3l_factors(*R)
    assert f[3] == -7 and all(f[:3])
    assert p3l_det(*R) == f[0] * f[1] * f[2] * f[3] != 0
    assert not p3l_concurrent(E[0], [PLine(E[i + 1], R[i]) for i in range(3)])
    # a21 a30 - a20 a31 = 0: L2 and L3 meet
    R = ([1, 2, 3, 4], [2, 3, 5, 1], [4, 6, 1, 7])
    assert p3l_factors(*R)[0] == 0 and p3l_det(*R) == 0
    assert PLine(E[2], R[1]).meets(PLine(E[3], R[2]))


def test_p3l_errors():
    with pytest.raises(HypothesisError):
        p3l_concurrent(E[1], [PLine(E[1], [1, 1, 1, 1]), PLine(E[2], [1, 2, 3, 4]), PLine(E[3], [4, 3, 2, 1])])


def test_factorization_identity():
    proof = p3l_factorization_identity()
    assert proof.proved
    assert proof.stats["degree"] == 9
    assert proof.stats["block_degrees"] == [3, 3, 3]


def frame_instance(seed, kind):
    """R_1..R_3 in the frame P = e0, L_i = line(e_i, R_i).

    kind 0: random, kind 1: concurrent (quartic factor forced to zero by
    solving for a12), kind 2: a degenerate factor forced to zero (solving for a21).
    """
    rng = SeededRng(seed)
    a = [[Fraction(rng.nonzero(-7, 7)) for _ in range(4)] for _ in range(3)]
    if kind == 1:
        a[0][2] = a[0][3] * a[1][1] * a[2][2] / (a[1][3] * a[2][1])
    elif kind == 2:
        a[1][1] = a[1][0] * a[2][1] / a[2][0]
    return a


def test_p3l_equivalences_on_frame_instances():
    for s in range(60):
        R = frame_instance(derive_seed(31, s), s % 3)
        lines = [PLine(E[i + 1], R[i]) for i in range(3)]
        value = p3l_det(*R)
        f = p3l_factors(*R)
        conc = p3l_concurrent(E[0], lines)
        degenerate = any(x == 0 for x in f[:3])
        assert (value == 0) == (conc or degenerate)
        if not degenerate:
            assert conc == exists_quadric(p3l_constraints(E[0], lines))[0]


def test_p3l_frame_moves_general_input():
    rng = SeededRng(12)
    for _ in range(10):
        P = PPoint(rng.vector(4, -5, 5))
        lines = [PLine(*random_points(rng, 2, 5)) for _ in range(3)]
        m, R = p3l_frame(P, lines)
        assert apply(m, P) == PPoint(E[0])
        for i, l in enumerate(lines):
            assert apply(m, l.a) == PPoint(E[i + 1])
        moved = [PLine(E[i + 1], R[i]) for i in range(3)]
        assert p3l_concurrent(E[0], moved) == p3l_concurrent(P, lines)


def test_reduce_examples():
    l1, l2 = PLine(E[0], E[1]), PLine(E[2], E[3])
    pts = [[1, 2, 3, 5], [1, 1, 1, 1], [1, -1, 2, 3], [2, 1, -1, 4]]
    p0, (t1, t2, t3) = reduce_4p2l(pts, l1, l2)
    assert p0 == PPoint(pts[0])
    assert t1 == PLine([1, 1, 0, 0], [0, 0, 1, 1])
    with pytest.raises(HypothesisError):
        reduce_4p2l([E[0], E[1], E[2], [1, 1, 0, 0]], l1, l2)


def test_reduce_on_segre():
    rng = SeededRng(14)
    done = 0
    while done < 10:
        pts = [segre_point(*rng.vector(4, -5, 5)) for _ in range(4)]
        l1, l2 = (segre_ruling(*rng.vector(2, -5, 5)) for _ in range(2))
        try:
            p0, tr = reduce_4p2l(pts, l1, l2)
        except DegeneracyError:
            continue
        assert exists_quadric(constraints_4p2l(pts, l1, l2))[0]
        assert exists_quadric(p3l_constraints(p0, tr))[0]
        done += 1


def test_reduce_rejects_meeting_transversals():
    # p1, p3 and l1 all lie in x0 = 0, so the transversals through p1 and p3
    # meet on l2; the reduced problem then admits the plane pair x0 * (...)
    # although no quadric carries the original data
    pts = [[-9, 0, 4, -7], [0, -2, -8, 6], [2, -1, 1, 6], [0, 9, 1, 0]]
    l1 = PLine([0, 1, -1, -1], [0, 3, 6, 5])
    l2 = PLine([5, -4, 4, -4], [4, 2, -3, -1])
    assert not exists_quadric(constraints_4p2l(pts, l1, l2))[0]
    with pytest.raises(HypothesisError, match="meet"):
        reduce_4p2l(pts, l1, l2)
