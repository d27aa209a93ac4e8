from fractions import Fraction
from random import Random

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from oracles import oracle_rank
from pascaltype.errors import ContainmentError, DegeneracyError, DimensionError, ProjectionError, RankError
from pascaltype.exact import Mat
from pascaltype.projective import (Hyperplane, PLine, PPoint, apply, canonical_coords, frame_map,
                                   general_position, line_hyperplane_meet, project_all,
                                   project_from_span, quadric_monomials, span_hyperplane,
                                   transversal_through_point, veronese2)
from pascaltype.rnc import rnc_sample
from pascaltype.rsb import normalize_lines, random_lines


def e(i, n=3):
    return [int(j == i) for j in range(n + 1)]


def test_canonical_coords():
    assert canonical_coords([2, 4, -6]) == (1, 2, -3)
    assert canonical_coords([Fraction(-1, 2), Fraction(1, 3), 0]) == (3, -2, 0)
    assert canonical_coords([0, -3, 6]) == (0, 1, -2)
    with pytest.raises(DegeneracyError):
        PPoint([0, 0, 0])


@given(st.lists(st.fractions(min_value=-9, max_value=9, max_denominator=7), min_size=2, max_size=6)
       .filter(any))
def test_canonicalization_idempotent(v):
    c = canonical_coords(v)
    assert canonical_coords(c) == c
    assert PPoint(v) == PPoint([3 * x for x in v])


def test_general_position_examples():
    frame = [e(i) for i in range(4)] + [[1, 1, 1, 1]]
    assert general_position(frame)
    assert not general_position([[1, 0, 0], [0, 1, 0], [1, 1, 0], [0, 0, 1]])
    inst = rnc_sample(3, 0)
    assert general_position(inst.points)
    # rank oracle: every 4-subset of the 7 points is independent
    from itertools import combinations
    for sub in combinations(inst.points, 4):
        assert oracle_rank([list(p.vec) for p in sub]) == 4


def test_projection_examples():
    assert project_from_span([e(0)], [1, 2, 3, 4]) == PPoint([2, 3, 4])
    assert project_from_span([e(0, 4), e(1, 4)], [5, 7, 1, 2, 3]) == PPoint([1, 2, 3])
    with pytest.raises(ProjectionError):
        project_from_span([e(0)], [3, 0, 0, 0])
    with pytest.raises(RankError):
        project_from_span([[1, 1, 0, 0], [2, 2, 0, 0]], [0, 0, 1, 0])


def _sympy_projection(center, completion, p):
    basis = sympy.Matrix([list(v) for v in center] + [list(v) for v in completion]).T
    coords = basis.LUsolve(sympy.Matrix(p))
    return [sympy.Rational(c) for c in coords[len(center):]]


def test_projection_against_change_of_basis_oracle():
    center = [[1, 1, 0, 0], e(2)]
    p = [1, 0, 1, 1]
    # completion by smallest-index coordinate vectors: e0 then e3 (e1 is dependent)
    expected = _sympy_projection(center, [e(0), e(3)], p)
    assert [Fraction(int(c.p), int(c.q)) for c in expected] == [1, 1]
    assert project_from_span(center, p) == PPoint([1, 1])


def test_projection_oracle_random():
    rng = Random(3)
    for _ in range(20):
        center = [[rng.randint(-3, 3) for _ in range(5)] for _ in range(2)]
        if oracle_rank(center) < 2:
            continue
        pts = [[rng.randint(-5, 5) for _ in range(5)] for _ in range(3)]
        completion, r = [], 2
        for i in range(5):
            if oracle_rank(center + completion + [e(i, 4)]) > r:
                completion.append(e(i, 4))
                r += 1
        for p in pts:
            exp = _sympy_projection(center, completion, p)
            if not any(exp):
                continue
            got = project_all(center, [p])[0]
            assert got == PPoint([Fraction(int(c.p), int(c.q)) for c in exp])


def test_veronese_and_quadric_monomials():
    assert veronese2([1, 1, 1]) == (1,) * 6
    assert veronese2([0, 1, 0]) == (0, 1, 0, 0, 0, 0)
    assert veronese2([1, 2, 3]) == (1, 4, 9, 2, 3, 6)
    assert quadric_monomials(PPoint(e(0))) == (1,) + (0,) * 9
    assert quadric_monomials(PPoint([1, 1, 1, 1])) == (1,) * 10
    assert quadric_monomials(PPoint([1, 2, 0, 1])) == (1, 4, 0, 1, 2, 0, 1, 0, 2, 0)
    with pytest.raises(DimensionError):
        veronese2([1, 2, 3, 4])


def test_span_hyperplane_examples():
    assert span_hyperplane([e(1), e(2), e(3)]) == Hyperplane([1, 0, 0, 0])
    assert span_hyperplane([e(i, 4) for i in range(4)]) == Hyperplane([0, 0, 0, 0, 1])
    with pytest.raises(RankError):
        span_hyperplane([e(1), e(2), [0, 1, 1, 0]])


def test_span_hyperplane_rsb_incidence():
    _, inst = normalize_lines(random_lines(4))
    P = [e(i, 4) for i in range(5)]
    Q = inst.Q
    pts = [P[4], Q[4], P[1], Q[1]]
    h = span_hyperplane(pts)
    assert all(h.contains(p) for p in pts)


def test_line_hyperplane_meet_examples():
    h0 = Hyperplane([1, 0, 0, 0])
    assert line_hyperplane_meet(PLine(e(0), e(1)), h0) == PPoint(e(1))
    l = PLine([1, 1, 0, 0, 0], [0, 0, 1, 1, 1])
    assert line_hyperplane_meet(l, Hyperplane([1, 0, 0, 0, 0])) == PPoint([0, 0, 1, 1, 1])
    with pytest.raises(ContainmentError):
        line_hyperplane_meet(PLine(e(1), e(2)), h0)


def test_frame_map_examples():
    frame = [e(i) for i in range(4)] + [[1, 1, 1, 1]]
    assert frame_map(frame) == Mat.identity(4)
    perm = [2, 0, 3, 1]
    m = frame_map([e(k) for k in perm] + [[1, 1, 1, 1]])
    for j, k in enumerate(perm):
        assert m @ e(k) == tuple(Fraction(int(i == j)) for i in range(4))
    with pytest.raises(RankError):
        frame_map([e(0), e(1), e(2), [1, 1, 1, 0], [1, 1, 1, 1]])


def test_frame_map_random_p4():
    rng = Random(8)
    done = 0
    while done < 10:
        pts = [[rng.randint(-4, 4) for _ in range(5)] for _ in range(6)]
        if not general_position(pts):
            continue
        m = frame_map(pts)
        for k in range(5):
            assert apply(m, pts[k]) == PPoint(e(k, 4))
        assert apply(m, pts[5]) == PPoint([1] * 5)
        done += 1


def test_transversal_examples():
    l1, l2 = PLine(e(0), e(1)), PLine(e(2), e(3))
    t = transversal_through_point([1, 1, 1, 1], l1, l2)
    assert t == PLine([1, 1, 0, 0], [0, 0, 1, 1])
    t = transversal_through_point([1, 0, 1, 0], l1, l2)
    assert t.contains(PPoint([1, 0, 1, 0])) and t.meets(l1) and t.meets(l2)
    assert t == PLine(e(0), e(2))
    with pytest.raises(DegeneracyError):
        transversal_through_point([1, 1, 1, 1], l1, PLine(e(0), e(2)))
    with pytest.raises(DegeneracyError):
        transversal_through_point(e(0), l1, l2)


def test_transversal_random_incidences():
    rng = Random(21)
    for _ in range(30):
        l1 = PLine(*[[rng.randint(-5, 5) for _ in range(4)] for _ in range(2)])
        l2 = PLine(*[[rng.randint(-5, 5) for _ in range(4)] for _ in range(2)])
        p = PPoint([rng.randint(-5, 5) for _ in range(4)])
        try:
            t = transversal_through_point(p, l1, l2)
        except DegeneracyError:
            continue
        assert t.contains(p) and t.meets(l1) and t.meets(l2)


def test_line_equality_is_span_equality():
    assert PLine([1, 0, 0, 0], [0, 1, 0, 0]) == PLine([1, 1, 0, 0], [2, -1, 0, 0])
    assert PLine(e(0), e(1)) != PLine(e(0), e(2))
    with pytest.raises(DegeneracyError):
        PLine([1, 2, 3, 4], [2, 4, 6, 8])
