from fractions import Fraction

import pytest

from oracles import leibniz_det, oracle_rank
from pascaltype.errors import DegeneracyError, DimensionError
from pascaltype.exact import Mat, det
from pascaltype.pascal import (PascalInstance, conic_matrix, derived_coords, pascal_derived, pascal_F,
                               pascal_G, pascal_identity)
from pascaltype.projective import PPoint, cross, veronese2
from pascaltype.rng import SeededRng, derive_seed

CONIC = [[1, t, t * t] for t in range(5)] + [[0, 0, 1]]


def random_hexagon(seed, box=20):
    rng = SeededRng(seed)
    while True:
        pts = [rng.vector(3, -box, box) for _ in range(6)]
        if all(any(p) for p in pts):
            return pts


def raw_G(vecs):
    return det(Mat.from_rows(derived_coords([[Fraction(x) for x in v] for v in vecs])))


def test_F_examples():
    assert pascal_F(CONIC) == 0
    pts = [[1, 2, 3], [1, 2, 3], [0, 1, 5], [2, 1, 1], [4, 0, 1], [1, 1, 7]]
    assert pascal_F(pts) == 0
    general = [[1, 2, 3], [-2, 5, 1], [0, 1, 5], [2, 1, 1], [4, 0, 1], [1, 1, 7]]
    value = pascal_F(general)
    assert value != 0
    assert value == leibniz_det([list(veronese2(p)) for p in general])


def test_derived_examples():
    q = pascal_derived(CONIC)
    assert oracle_rank([list(p.vec) for p in q]) <= 2
    assert cross([1, 0, 0], [0, 1, 0]) == [0, 0, 1]


def test_derived_degeneracies():
    with pytest.raises(DegeneracyError):
        pascal_derived([[1, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1], [1, 2, 3]])
    # p1, p2, p4, p5 on one line: L1 = L4
    with pytest.raises(DegeneracyError):
        pascal_derived([[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 0], [1, 2, 0], [1, 2, 3]])
    with pytest.raises(DimensionError):
        PascalInstance([[1, 0, 0]] * 5)


def test_G_examples():
    assert pascal_G(CONIC) == 0
    general = [[1, 2, 3], [-2, 5, 1], [0, 1, 5], [2, 1, 1], [4, 0, 1], [1, 1, 7]]
    assert pascal_G(general) == pascal_F(general)


def test_pappus_configuration():
    # three points on each of two lines, alternating around the hexagon
    rng = SeededRng(7)
    done = 0
    while done < 50:
        a1, a2, b1, b2 = (rng.vector(3, -6, 6) for _ in range(4))
        s = [rng.nonzero(-5, 5) for _ in range(6)]
        on_a = [[a1[k] + s[i] * a2[k] for k in range(3)] for i in range(3)]
        on_b = [[b1[k] + s[3 + i] * b2[k] for k in range(3)] for i in range(3)]
        hexagon = [on_a[0], on_b[0], on_a[1], on_b[1], on_a[2], on_b[2]]
        try:
            inst = PascalInstance(hexagon)
            pascal_derived(inst)
        except DegeneracyError:
            continue
        assert pascal_F(inst) == 0
        assert pascal_G(inst) == 0
        done += 1


def test_F_equals_G_seeded():
    checked = 0
    for s in range(10_000):
        pts = random_hexagon(derive_seed(2024, s))
        try:
            G = pascal_G(pts)
        except DegeneracyError:
            continue
        assert pascal_F(pts) == G
        checked += 1
    assert checked > 9_900


def test_raw_scaling_degree_two():
    pts = random_hexagon(5)
    base_F = det(conic_matrix(pts))
    base_G = raw_G(pts)
    for i in range(6):
        for lam in (2, Fraction(-3, 5)):
            scaled = [list(p) for p in pts]
            scaled[i] = [lam * x for x in scaled[i]]
            assert det(conic_matrix(scaled)) == lam ** 2 * base_F
            assert raw_G(scaled) == lam ** 2 * base_G


def test_projective_invariance():
    for s in range(20):
        rng = SeededRng(derive_seed(99, s))
        pts = random_hexagon(derive_seed(98, s))
        m = Mat(3, 3, rng.vector(9, -4, 4))
        dm = det(m)
        if dm == 0:
            continue
        moved = [m @ p for p in pts]
        assert det(conic_matrix(moved)) == dm ** 4 * det(conic_matrix(pts))
        assert raw_G(moved) == dm ** 4 * raw_G(pts)
        assert (pascal_F(moved) == 0) == (pascal_F(pts) == 0)


def test_collinear_triples_reported():
    inst = PascalInstance([[1, 0, 0], [0, 1, 0], [1, 1, 0], [0, 0, 1], [1, 2, 3], [2, 1, 7]])
    assert inst.collinear_triples() == [(0, 1, 2)]
    assert PascalInstance(CONIC).no_three_collinear()


def test_identity():
    proof = pascal_identity()
    assert proof.proved and proof.difference.is_zero()
    assert proof.stats["degree"] == 12
    assert proof.stats["point_degrees"] == [2] * 6
    assert proof.stats["degree_G"] == 12
    pts = random_hexagon(1)
    flat = [Fraction(c) for p in pts for c in PPoint(p).vec]
    from pascaltype.multipoly import poly_eval
    assert poly_eval(proof.lhs, flat) == pascal_F(pts)
