import random
from fractions import Fraction

import pytest

import instgen
from disjhull.lifting import (
    DisjunctionInstance,
    full_lifting_system,
    lift_from_p0,
    lift_from_pk,
)
from disjhull.polyops import (
    EmptyPolytopeError,
    HPolytope,
    LinearInequality,
    canonical_key,
    canonicalize,
    face_tight_points,
)
from disjhull.ratgeom import affine_rank


def interval_instance(*segments):
    polys = tuple(HPolytope.make(1, [[1], [-1]], [up, -lo]) for lo, up in segments)
    return DisjunctionInstance(1, len(segments) - 1, polys)


def test_lift_from_p0_intervals():
    inst = interval_instance((0, 5), (2, 3))
    res = lift_from_p0(LinearInequality.make([1], [], 5), inst)
    assert res.lifted == LinearInequality.make([1], [2], 5)
    assert res.M == (0, 2)
    assert res.origin_k == 0


def test_lift_from_p0_prop1(prop1_instance):
    res = lift_from_p0(LinearInequality.make([1, 0, 0], [], 5), prop1_instance)
    assert res.lifted == LinearInequality.make([1, 0, 0], [4], 5)

    res = lift_from_p0(LinearInequality.make([-1, -1, -1], [], -14), prop1_instance)
    assert res.lifted == LinearInequality.make([-1, -1, -1], [-14], -14)


def test_lift_from_pk_prop1(prop1_instance):
    res = lift_from_pk(LinearInequality.make([-1, 0, 0], [], 0), 1, prop1_instance)
    assert res.lifted == LinearInequality.make([-1, 0, 0], [-4], -4)

    res = lift_from_pk(LinearInequality.make([1, 1, 1], [], 1), 1, prop1_instance)
    assert res.lifted == LinearInequality.make([1, 1, 1], [14], 15)


def test_lift_from_pk_three_intervals():
    # The (*_k) closed form: M_0 = 2 and M_2 = -2 give x - 2 z1 - 4 z2 <= 1.
    inst = interval_instance((0, 1), (2, 3), (4, 5))
    res = lift_from_pk(LinearInequality.make([1], [], 3), 1, inst)
    assert res.M == (2, 0, -2)
    assert res.lifted == LinearInequality.make([1], [-2, -4], 1)


def test_lift_rejects_invalid_source(prop1_instance):
    with pytest.raises(ValueError):
        lift_from_p0(LinearInequality.make([1, 0, 0], [], 4), prop1_instance)
    with pytest.raises(ValueError):
        lift_from_pk(LinearInequality.make([1, 1, 1], [], 0), 1, prop1_instance)
    with pytest.raises(ValueError):
        lift_from_pk(LinearInequality.make([1, 1, 1], [], 1), 2, prop1_instance)


def test_lift_rejects_z_terms(prop1_instance):
    with pytest.raises(ValueError):
        lift_from_p0(LinearInequality.make([1, 0, 0], [1], 5), prop1_instance)


def test_full_lifting_system_prop1(prop1_instance):
    fl = full_lifting_system(prop1_instance)
    assert len(fl) == 10
    assert fl.counts() == {"nonvertical": 2, "lifting": 8, "other": 0}


def test_full_lifting_system_three_intervals(intervals3_instance):
    fl = full_lifting_system(intervals3_instance)
    assert len(fl) == 5
    keys = fl.keys()
    assert canonical_key(LinearInequality.make([1], [-2, -4], 1)) in keys
    assert canonical_key(LinearInequality.make([-1], [2, 4], 0)) in keys


def test_full_lifting_system_box_pairs_merge():
    from disjhull.families import gen_hyperrect

    inst = gen_hyperrect([((0, 0), (2, 2)), ((3, 3), (4, 4))])
    fl = full_lifting_system(inst)
    assert len(fl) == 6
    lifted = [e for e in fl.entries if e.kind == "lifting"]
    assert len(lifted) == 4
    # each bound arises once from each side
    assert all(len(e.provenance) == 2 for e in lifted)


def test_lifted_inequalities_valid_on_all_lifted_points():
    rng = random.Random(61)
    for _ in range(8):
        inst = instgen.random_lowdim_instance(rng, rng.choice([1, 2]), rng.choice([1, 2]))
        fl = full_lifting_system(inst)
        for e in fl.entries:
            assert all(e.ineq.satisfied_by(pt) for pt in inst.lifted_points)


def test_lifting_facethood_theorem():
    # lifting a facet row of a full-dimensional polytope describes a facet
    rng = random.Random(62)
    for _ in range(6):
        inst = instgen.random_lowdim_instance(rng, 2, rng.choice([1, 2]))
        dim = inst.d + inst.n
        for e in full_lifting_system(inst).entries:
            if e.kind != "lifting":
                continue
            valid, tight = face_tight_points(inst.lifted_points, e.ineq)
            assert valid and affine_rank(tight) == dim


def test_lifting_order_independence(prop1_instance):
    # M values are independent LPs, so any lifting order gives the closed form.
    q = LinearInequality.make([1, 0, 0], [], 5)
    res = lift_from_p0(q, prop1_instance)
    rng = random.Random(7)
    order = list(range(1, prop1_instance.n + 1))
    for _ in range(3):
        rng.shuffle(order)
        ms = {}
        for i in order:
            from disjhull import lp

            out = lp.maximize(q.alpha, prop1_instance.polytopes[i])
            ms[i] = q.rho - out.value
        assert tuple(ms[i] for i in sorted(ms)) == res.M[1:]


def test_case2_swap_symmetry():
    # lifting from P_k equals lifting from P_0 after swapping and substituting z -> 1 - z
    inst = interval_instance((0, 5), (2, 3))
    q = LinearInequality.make([1], [], 3)
    lifted_k = lift_from_pk(q, 1, inst).lifted

    swapped = interval_instance((2, 3), (0, 5))
    lifted_0 = lift_from_p0(q, swapped).lifted
    # substitute z = 1 - z' into the case-1 form
    subbed = LinearInequality(
        lifted_0.alpha, tuple(-m for m in lifted_0.mu), lifted_0.rho - sum(lifted_0.mu)
    )
    assert canonicalize(subbed) == canonicalize(lifted_k)


def test_instance_validation():
    with pytest.raises(EmptyPolytopeError):
        DisjunctionInstance(
            1,
            1,
            (
                HPolytope.make(1, [[1], [-1]], [0, -1]),
                HPolytope.make(1, [[1], [-1]], [1, 0]),
            ),
        )
    with pytest.raises(ValueError):
        # no full-dimensional polytope
        DisjunctionInstance(
            1,
            1,
            (
                HPolytope.make(1, [[1], [-1]], [0, 0]),
                HPolytope.make(1, [[1], [-1]], [2, -2]),
            ),
        )
    with pytest.raises(ValueError):
        DisjunctionInstance(1, 0, (HPolytope.make(1, [[1], [-1]], [1, 0]),))
