import random
from fractions import Fraction

import pytest

import instgen
from disjhull import lp
from disjhull.families import (
    PhiConditionError,
    RowHypothesisError,
    check_phi,
    common_matrix_hull,
    detect_hyperrect,
    detect_reflected_simplex,
    gen_hyperrect,
    gen_padded_reflected_simplex,
    gen_reflected_simplex,
    gen_rhs_perturbation,
    hyperrect_hull,
    is_simple,
    padded_reflected_simplex_data,
    reflected_simplex_hull,
)
from disjhull.hullenum import compare, enumerate_facets, oracle_hull
from disjhull.lifting import DisjunctionInstance
from disjhull.polyops import (
    EmptyPolytopeError,
    HPolytope,
    LinearInequality,
    canonical_key,
    extreme_points,
    remove_redundant,
)
from disjhull.ratgeom import dot, vec


def test_gen_hyperrect_two_intervals():
    inst = gen_hyperrect([((0,), (5,)), ((2,), (3,))])
    assert inst.d == 1 and inst.n == 1
    assert inst.common_matrix == ((Fraction(1),), (Fraction(-1),))
    assert inst.polytopes[0].b == vec([5, 0])
    assert inst.polytopes[1].b == vec([3, -2])


def test_gen_hyperrect_shape_and_errors():
    inst = gen_hyperrect([((0, 0), (2, 2)), ((3, 3), (4, 4))])
    assert all(p.m == 4 for p in inst.polytopes)
    with pytest.raises(ValueError):
        gen_hyperrect([((0, 0), (0, 2)), ((3, 3), (4, 4))])
    with pytest.raises(ValueError):
        gen_hyperrect([((0, 0), (1, 1))])


def test_hyperrect_hull_closed_form():
    fl = hyperrect_hull([((0, 0), (2, 2)), ((3, 3), (4, 4))])
    expected = [
        LinearInequality.make([1, 0], [-2], 2),
        LinearInequality.make([0, 1], [-2], 2),
        LinearInequality.make([-1, 0], [3], 0),
        LinearInequality.make([0, -1], [3], 0),
        LinearInequality.make([0, 0], [-1], 0),
        LinearInequality.make([0, 0], [1], 1),
    ]
    assert fl.keys() == {canonical_key(q) for q in expected}


def test_hyperrect_hull_identical_intervals():
    fl = hyperrect_hull([((0,), (1,)), ((0,), (1,))])
    expected = [
        LinearInequality.make([1], [0], 1),
        LinearInequality.make([-1], [0], 0),
        LinearInequality.make([0], [1], 1),
        LinearInequality.make([0], [-1], 0),
    ]
    assert fl.keys() == {canonical_key(q) for q in expected}


def test_hyperrect_hull_matches_enumeration_random():
    rng = random.Random(91)
    for _ in range(6):
        d = rng.choice([1, 2, 3])
        n = rng.choice([1, 2])
        bounds = instgen.random_box_bounds(rng, d, n)
        assert compare(hyperrect_hull(bounds), enumerate_facets(gen_hyperrect(bounds))).equal


def test_gen_reflected_simplex(prop1_p0, prop1_p1):
    inst = gen_reflected_simplex(3, 1, 5)
    assert inst.polytopes[0].A == prop1_p0.A and inst.polytopes[0].b == prop1_p0.b
    assert inst.polytopes[1].A == prop1_p1.A and inst.polytopes[1].b == prop1_p1.b
    assert extreme_points(inst.polytopes[0]).points == extreme_points(prop1_p0).points
    gen_reflected_simplex(4, 1, 3)
    with pytest.raises(ValueError):
        gen_reflected_simplex(2, 1, 5)
    with pytest.raises(ValueError):
        gen_reflected_simplex(3, 0, 5)


def test_reflected_simplex_hull_prop1(prop1_instance):
    fl = reflected_simplex_hull(3, 1, 5)
    assert len(fl) == 16
    assert compare(fl, enumerate_facets(prop1_instance)).equal


def test_reflected_simplex_hull_d4_counts():
    fl = reflected_simplex_hull(4, 1, 3)
    assert len(fl) == 32
    assert fl.counts() == {"nonvertical": 2, "lifting": 10, "other": 20}


def test_padded_simplex_reduces_to_prop1(prop1_p0, prop1_p1):
    inst = gen_padded_reflected_simplex()
    assert remove_redundant(inst.polytopes[0]) == prop1_p0
    assert extreme_points(inst.polytopes[0]).points == extreme_points(prop1_p0).points
    assert extreme_points(inst.polytopes[1]).points == extreme_points(prop1_p1).points


def test_padded_simplex_rows_touch_both_polytopes():
    inst = gen_padded_reflected_simplex()
    a = inst.common_matrix
    for p in inst.polytopes:
        for j, row in enumerate(a):
            out = lp.maximize(row, p)
            assert out.value == p.b[j]


def test_padded_simplex_printed_row_is_infeasible():
    a, _ = padded_reflected_simplex_data(printed_row=True)
    assert a[0] == vec([1, 0, 1])
    with pytest.raises(EmptyPolytopeError):
        gen_padded_reflected_simplex(printed_row=True)


def test_check_phi_boxes_hold():
    rng = random.Random(97)
    for _ in range(5):
        d = rng.choice([1, 2, 3])
        bounds = instgen.random_box_bounds(rng, d, rng.choice([1, 2]))
        inst = gen_hyperrect(bounds)
        rep = check_phi(inst.common_matrix, [p.b for p in inst.polytopes])
        assert rep.holds and rep.witness is None


def test_check_phi_padded_fails_with_witness():
    a, (b0, b1) = padded_reflected_simplex_data()
    rep = check_phi(a, [b0, b1])
    assert not rep.holds
    assert rep.witness.tau == (1, 2, 3)
    x0 = lp.basic_solution(a, b0, rep.witness)
    x1 = lp.basic_solution(a, b1, rep.witness)
    assert x0 == vec([5, 5, 5]) and x1 == vec([1, 1, 1])
    assert all(dot(a[i], x0) <= b0[i] for i in range(8))
    assert not all(dot(a[i], x1) <= b1[i] for i in range(8))


def test_check_phi_single_rhs_trivially_holds():
    a, (b0, _) = padded_reflected_simplex_data()
    assert check_phi(a, [b0]).holds


def test_rhs_perturbation_small_deltas():
    rng = random.Random(103)
    base = instgen.random_simple_3d_base(rng)
    deltas = instgen.random_rhs_deltas(rng, base.m, 2)
    inst, rep = gen_rhs_perturbation(base, deltas)
    assert inst.n == 2
    assert rep.holds

    inst0, rep0 = gen_rhs_perturbation(base, [vec([0] * base.m)])
    assert rep0.holds


def test_rhs_perturbation_large_delta_breaks_phi():
    # shrinking the cut until it cuts deeper than the box changes the
    # vertex-feasibility pattern
    base = HPolytope.make(
        3,
        [[1, 0, 0], [0, 1, 0], [0, 0, 1], [-1, 0, 0], [0, -1, 0], [0, 0, -1], [1, 1, 1]],
        [2, 2, 2, 0, 0, 0, 5],
    )
    assert is_simple(base)
    delta = vec([0, 0, 0, 0, 0, 0, -3])
    inst, rep = gen_rhs_perturbation(base, [delta])
    assert not rep.holds
    assert rep.witness is not None


def test_rhs_perturbation_rejects_nonsimple():
    octahedron = HPolytope.make(
        3,
        [[sx, sy, sz] for sx in (1, -1) for sy in (1, -1) for sz in (1, -1)],
        [1] * 8,
    )
    with pytest.raises(ValueError):
        gen_rhs_perturbation(octahedron, [vec([0] * 8)])


def test_common_matrix_hull_boxes():
    bounds = [((0, 0), (2, 2)), ((3, 3), (4, 4))]
    inst = gen_hyperrect(bounds)
    fl = common_matrix_hull(inst)
    assert compare(fl, hyperrect_hull(bounds)).equal
    assert compare(fl, oracle_hull(inst)).equal


def test_common_matrix_hull_padded_raises_phi():
    with pytest.raises(PhiConditionError) as exc:
        common_matrix_hull(gen_padded_reflected_simplex())
    assert exc.value.report.witness.tau == (1, 2, 3)


def test_common_matrix_hull_requires_common_matrix(prop1_instance):
    with pytest.raises(ValueError):
        common_matrix_hull(prop1_instance)


def test_common_matrix_hull_facet_hypothesis():
    # identical polytopes make Phi trivial, but a row that is tight only
    # at a vertex is a facet of no polytope
    rows = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [-1, -1, -1], [1, 1, 1]]
    b = vec([5, 5, 5, -14, 15])
    p = HPolytope.make(3, rows, b)
    inst = DisjunctionInstance(3, 1, (p, p))
    with pytest.raises(RowHypothesisError):
        common_matrix_hull(inst)


def test_common_matrix_hull_perturbation_matches_oracle():
    rng = random.Random(107)
    base = instgen.random_simple_3d_base(rng)
    while True:
        deltas = instgen.random_rhs_deltas(rng, base.m, 1)
        inst, rep = gen_rhs_perturbation(base, deltas)
        if rep.holds:
            break
    fl = common_matrix_hull(inst)
    assert compare(fl, oracle_hull(inst)).equal


def test_detectors():
    bounds = [((0, 0), (2, 2)), ((3, 3), (4, 4))]
    inst = gen_hyperrect(bounds)
    got = detect_hyperrect(inst)
    assert got == [(vec([0, 0]), vec([2, 2])), (vec([3, 3]), vec([4, 4]))]
    assert detect_reflected_simplex(inst) is None

    simplex = gen_reflected_simplex(3, 1, 5)
    assert detect_hyperrect(simplex) is None
    assert detect_reflected_simplex(simplex) == (3, 1, 5)

    padded = gen_padded_reflected_simplex()
    assert detect_reflected_simplex(padded) == (3, 1, 5)
