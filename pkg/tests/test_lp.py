import random
from fractions import Fraction

import pytest

from disjhull.lp import (
    BasicPartition,
    basic_solution,
    enumerate_basic_partitions,
    maximize,
    maximize_exhaustive,
)
from disjhull.polyops import HPolytope, extreme_points
from disjhull.ratgeom import dot, mat, matrix_rank, vec


def unit_simplex(d, a=1):
    rows = [[-1 if j == i else 0 for j in range(d)] for i in range(d)] + [[1] * d]
    return HPolytope.make(d, rows, [0] * d + [a])


def test_maximize_simplex_sum(prop1_p1):
    out = maximize([1, 1, 1], unit_simplex(3))
    assert out.status == "optimal" and out.value == 1
    out = maximize([1, 1, 1], prop1_p1)
    assert out.value == 1


def test_maximize_lifting_value(prop1_p1):
    # M for the S.1 lifting: 5 - max x1 over P_1 = 4.
    out = maximize([-1, 0, 0], prop1_p1)
    assert out.status == "optimal" and out.value == 0
    out = maximize([1, 0, 0], prop1_p1)
    assert Fraction(5) - out.value == 4


def test_maximize_infeasible_with_certificate():
    p = HPolytope.make(1, [[1], [-1]], [0, -1])
    out = maximize([1], p)
    assert out.status == "infeasible"
    y = out.certificate
    assert all(v >= 0 for v in y)
    assert sum(y[i] * p.A[i][0] for i in range(2)) == 0
    assert dot(y, p.b) < 0


def test_maximize_unbounded_with_ray():
    p = HPolytope.make(2, [[-1, 0]], [0])
    out = maximize([1, 0], p)
    assert out.status == "unbounded"
    r = out.certificate
    assert all(dot(row, r) <= 0 for row in p.A)
    assert dot(vec([1, 0]), r) > 0


def test_maximize_strong_duality_and_slackness():
    rng = random.Random(17)
    optimal = 0
    for _ in range(250):
        d = rng.randint(1, 3)
        m = rng.randint(1, d + 4)
        p = HPolytope.make(
            d,
            [[rng.randint(-4, 4) for _ in range(d)] for _ in range(m)],
            [Fraction(rng.randint(-4, 8), rng.randint(1, 2)) for _ in range(m)],
        )
        c = [rng.randint(-4, 4) for _ in range(d)]
        out = maximize(c, p)
        if out.status != "optimal":
            continue
        optimal += 1
        assert all(dot(row, out.primal) <= rhs for row, rhs in zip(p.A, p.b))
        assert all(v >= 0 for v in out.dual)
        assert dot(out.dual, p.b) == out.value
        for j in range(m):
            if out.dual[j] > 0:
                assert dot(p.A[j], out.primal) == p.b[j]
        if out.partition is not None:
            assert basic_solution(p.A, p.b, out.partition) == out.primal
    assert optimal > 50


def test_maximize_agrees_with_vertex_enumeration():
    rng = random.Random(23)
    done = 0
    while done < 60:
        d = rng.randint(1, 3)
        lo = [rng.randint(-5, 0) for _ in range(d)]
        up = [rng.randint(1, 6) for _ in range(d)]
        rows = [[1 if j == i else 0 for j in range(d)] for i in range(d)]
        rows += [[-1 if j == i else 0 for j in range(d)] for i in range(d)]
        p = HPolytope.make(d, rows, up + [-v for v in lo])
        c = [rng.randint(-5, 5) for _ in range(d)]
        out = maximize(c, p)
        assert out.status == "optimal"
        best = max(dot(vec(c), v) for v in extreme_points(p).points)
        assert out.value == best
        done += 1


def test_maximize_deterministic(prop1_p0):
    a = maximize([1, 2, 0], prop1_p0)
    b = maximize([1, 2, 0], prop1_p0)
    assert a == b


def test_maximize_exhaustive_self_check(prop1_p0):
    for c in ([1, 0, 0], [1, 1, 1], [-2, 3, 1]):
        assert maximize_exhaustive(c, prop1_p0) == maximize(c, prop1_p0).value


@pytest.mark.parametrize("d", [1, 2, 3])
def test_enumerate_partitions_hyperrectangle(d):
    rows = [[1 if j == i else 0 for j in range(d)] for i in range(d)]
    rows += [[-1 if j == i else 0 for j in range(d)] for i in range(d)]
    parts = enumerate_basic_partitions(mat(rows))
    assert len(parts) == 2**d
    # per coordinate, either the upper- or lower-bound row appears
    for part in parts:
        coords = sorted((i - 1) % d for i in part.tau)
        assert coords == list(range(d))


def test_enumerate_partitions_interval():
    parts = enumerate_basic_partitions(mat([[1], [-1]]))
    assert [p.tau for p in parts] == [(1,), (2,)]
    assert parts[0].eta == (2,)


def test_enumerate_partitions_padded_matrix():
    from disjhull.families import padded_reflected_simplex_data

    a, _ = padded_reflected_simplex_data()
    parts = enumerate_basic_partitions(a)
    taus = [p.tau for p in parts]
    assert (1, 2, 3) in taus
    assert taus == sorted(taus)
    for p in parts:
        assert matrix_rank([a[i - 1] for i in p.tau]) == 3


def test_enumerate_partitions_rank_deficient():
    with pytest.raises(ValueError):
        enumerate_basic_partitions(mat([[1, 1], [2, 2]]))
