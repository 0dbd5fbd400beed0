"""Instance families, their closed-form hull descriptions, and condition Phi.

Condition Phi for a shared constraint matrix A: for every basic partition
(tau, eta) of the rows, the basic solution computed from each right-hand
side b^i is feasible for either all of the polytopes or none of them.
When it holds (and every row describes a nonempty face of every polytope
and a facet of some), the row liftings A x + sum_i (b^0 - b^i) z_i <= b^0
plus the non-vertical inequalities give a minimal description of the hull.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from . import lp, polyops
from .lifting import DisjunctionInstance, nonvertical_inequalities
from .lp import BasicPartition, basic_solution, enumerate_basic_partitions
from .polyops import FacetEntry, FacetList, HPolytope, LinearInequality
from .ratgeom import Matrix, Vector, affine_rank, dot, mat, rat, unit, vec, zeros


class HypothesisError(ValueError):
    """A conditional construction was invoked with its hypotheses violated."""


class PhiConditionError(HypothesisError):
    def __init__(self, report: "PhiReport"):
        self.report = report
        super().__init__(f"condition Phi fails at partition tau={report.witness.tau}")


class RowHypothesisError(HypothesisError):
    """A matrix row violates the nonempty-face or facet-of-some hypothesis."""


@dataclass(frozen=True)
class PhiReport:
    holds: bool
    witness: Optional[BasicPartition]
    # (partition, per-polytope feasibility of its basic solutions)
    feasibility_table: tuple[tuple[BasicPartition, tuple[bool, ...]], ...]


def check_phi(a: Matrix, bs: Sequence[Sequence[Fraction]]) -> PhiReport:
    """Evaluate condition Phi for the matrix a and right-hand sides bs.

    For every basic partition, the basic solution of each rhs must be
    feasible for all of the systems or for none; the witness is the
    lexicographically first violating partition.
    """
    a = mat(a)
    rhs = [vec(b) for b in bs]
    m = len(a)
    if any(len(b) != m for b in rhs):
        raise ValueError("rhs length does not match matrix rows")
    table = []
    witness = None
    for part in enumerate_basic_partitions(a):
        bits = []
        eta0 = [i - 1 for i in part.eta]
        for b in rhs:
            x = basic_solution(a, b, part)
            bits.append(all(dot(a[i], x) <= b[i] for i in eta0))
        bits = tuple(bits)
        table.append((part, bits))
        if witness is None and any(bits) and not all(bits):
            witness = part
    return PhiReport(witness is None, witness, tuple(table))


def gen_hyperrect(bounds: Sequence[tuple[Sequence, Sequence]]) -> DisjunctionInstance:
    """Instance of n+1 boxes sharing the matrix [I; -I], rhs (u_i; -l_i)."""
    if len(bounds) < 2:
        raise ValueError("need at least two boxes")
    lowers = [vec(lo) for lo, _ in bounds]
    uppers = [vec(up) for _, up in bounds]
    d = len(lowers[0])
    if any(len(lo) != d or len(up) != d for lo, up in zip(lowers, uppers)):
        raise ValueError("bound dimension mismatch")
    for lo, up in zip(lowers, uppers):
        if any(l >= u for l, u in zip(lo, up)):
            raise ValueError("degenerate bounds (need l < u componentwise)")
    rows = tuple(unit(d, i) for i in range(d)) + tuple(
        tuple(-x for x in unit(d, i)) for i in range(d)
    )
    polys = tuple(
        HPolytope(d, rows, up + tuple(-l for l in lo)) for lo, up in zip(lowers, uppers)
    )
    return DisjunctionInstance(d, len(bounds) - 1, polys)


def hyperrect_hull(bounds: Sequence[tuple[Sequence, Sequence]]) -> FacetList:
    """Closed-form hull of a box disjunction: lifted bounds plus non-verticals."""
    inst = gen_hyperrect(bounds)  # validates the parameters
    d, n = inst.d, inst.n
    lowers = [vec(lo) for lo, _ in bounds]
    uppers = [vec(up) for _, up in bounds]
    entries = list(nonvertical_inequalities(d, n))
    for i in range(d):
        mu_up = tuple(uppers[0][i] - uppers[j][i] for j in range(1, n + 1))
        entries.append(
            FacetEntry(
                LinearInequality(unit(d, i), mu_up, uppers[0][i]),
                (f"closed-form:upper:x{i + 1}",),
            )
        )
        mu_lo = tuple(lowers[j][i] - lowers[0][i] for j in range(1, n + 1))
        entries.append(
            FacetEntry(
                LinearInequality(tuple(-x for x in unit(d, i)), mu_lo, -lowers[0][i]),
                (f"closed-form:lower:x{i + 1}",),
            )
        )
    return FacetList.build(d, n, entries)


def _simplex_rows(d: int, a: Fraction, b: Fraction):
    ones = (Fraction(1),) * d
    p0 = HPolytope(
        d,
        tuple(unit(d, i) for i in range(d)) + (tuple(-x for x in ones),),
        vec([b] * d + [-(d * b - a)]),
    )
    p1 = HPolytope(
        d,
        tuple(tuple(-x for x in unit(d, i)) for i in range(d)) + (ones,),
        vec([0] * d + [a]),
    )
    return p0, p1


def gen_reflected_simplex(d: int, a, b) -> DisjunctionInstance:
    """The pair of right simplices related by point reflection through (b/2) e.

    P_0 = {x : x_i <= b, sum x >= d b - a} and P_1 = {x : x >= 0, sum x <= a}.
    """
    a = rat(a)
    b = rat(b)
    if d < 3:
        raise ValueError("the family is defined for d >= 3")
    if a <= 0:
        raise ValueError("need a > 0")
    return DisjunctionInstance(d, 1, _simplex_rows(d, a, b))


def reflected_simplex_hull(d: int, a, b) -> FacetList:
    """Closed-form facet list of the reflected-simplex hull.

    2(d+1) liftings, the two z bounds, and for each m in 2..d-1 the
    non-lifting families over index sets T_0 (|T_0| = d+1-m) and
    T_1 (|T_1| = m):

      -sum_{T_0} x_i + (a - (d+1-m) b) z_1 <= a - (d+1-m) b
       sum_{T_1} x_i + (m b - a) z_1 <= m b
    """
    a = rat(a)
    b = rat(b)
    if d < 3:
        raise ValueError("the family is defined for d >= 3")
    if a <= 0:
        raise ValueError("need a > 0")
    ones = (Fraction(1),) * d
    entries = list(nonvertical_inequalities(d, 1))
    for i in range(d):
        entries.append(
            FacetEntry(
                LinearInequality(unit(d, i), (b - a,), b),
                (f"lifting:p0:row{i}",),
            )
        )
        entries.append(
            FacetEntry(
                LinearInequality(tuple(-x for x in unit(d, i)), (a - b,), a - b),
                (f"lifting:p1:row{i}",),
            )
        )
    entries.append(
        FacetEntry(
            LinearInequality(tuple(-x for x in ones), (a - d * b,), a - d * b),
            (f"lifting:p0:row{d}",),
        )
    )
    entries.append(
        FacetEntry(
            LinearInequality(ones, (d * b - a,), Fraction(d) * b),
            (f"lifting:p1:row{d}",),
        )
    )
    for m in range(2, d):
        t = d + 1 - m
        coef = a - t * b
        for t0 in itertools.combinations(range(d), t):
            alpha = tuple(Fraction(-1 if i in t0 else 0) for i in range(d))
            label = f"closed-form:T0({','.join(str(i + 1) for i in t0)})"
            entries.append(FacetEntry(LinearInequality(alpha, (coef,), coef), (label,)))
        for t1 in itertools.combinations(range(d), m):
            alpha = tuple(Fraction(1 if i in t1 else 0) for i in range(d))
            label = f"closed-form:T1({','.join(str(i + 1) for i in t1)})"
            entries.append(
                FacetEntry(LinearInequality(alpha, (m * b - a,), m * b), (label,))
            )
    return FacetList.build(d, 1, entries)


def padded_reflected_simplex_data(printed_row: bool = False):
    """The 8-row common-matrix data padding the d=3, a=1, b=5 simplices.

    Each simplex keeps its own four facet rows and gains the other's,
    shifted to touch it in a single vertex.  The published first row
    (1, 0, 1) contradicts the accompanying basic solution (5, 5, 5) for
    tau = (1, 2, 3) and makes P_0 empty; the corrected row (1, 0, 0) is
    the default, with the printed variant available for inspection.
    """
    first = (1, 0, 1) if printed_row else (1, 0, 0)
    a = mat(
        [
            first,
            (0, 1, 0),
            (0, 0, 1),
            (-1, -1, -1),
            (-1, 0, 0),
            (0, -1, 0),
            (0, 0, -1),
            (1, 1, 1),
        ]
    )
    b0 = vec([5, 5, 5, -14, -4, -4, -4, 15])
    b1 = vec([1, 1, 1, 0, 0, 0, 0, 1])
    return a, (b0, b1)


def gen_padded_reflected_simplex(printed_row: bool = False) -> DisjunctionInstance:
    """The padded d=3 instance (the printed-row variant has an empty P_0)."""
    a, (b0, b1) = padded_reflected_simplex_data(printed_row)
    return DisjunctionInstance(3, 1, (HPolytope(3, a, b0), HPolytope(3, a, b1)))


def is_simple(p: HPolytope) -> bool:
    """Every vertex tight on exactly d rows (demands an irredundant description)."""
    for v in polyops.extreme_points(p).points:
        tight = sum(1 for row, rhs in zip(p.A, p.b) if dot(row, v) == rhs)
        if tight != p.d:
            return False
    return True


def gen_rhs_perturbation(p: HPolytope, deltas: Sequence[Sequence]):
    """Shift the right-hand sides of a simple polytope, keeping its matrix.

    Returns (instance, PhiReport); the caller decides what to do when Phi
    fails.  Small enough shifts preserve the vertex combinatorics, which
    makes Phi hold, but any shifts are accepted here.
    """
    if not polyops.is_full_dimensional(p):
        raise ValueError("base polytope must be full dimensional")
    if not is_simple(p):
        raise ValueError("base polytope is not simple")
    shifts = [vec(dd) for dd in deltas]
    if any(len(s) != p.m for s in shifts):
        raise ValueError("delta length does not match row count")
    polys = (p,) + tuple(
        HPolytope(p.d, p.A, tuple(x + s for x, s in zip(p.b, shift))) for shift in shifts
    )
    inst = DisjunctionInstance(p.d, len(shifts), polys)
    report = check_phi(p.A, [q.b for q in polys])
    return inst, report


def common_matrix_hull(inst: DisjunctionInstance) -> FacetList:
    """Closed-form hull for a common constraint matrix, under condition Phi.

    Emits one lifting per row, A_j x + sum_i (b^0_j - b^i_j) z_i <= b^0_j,
    plus the non-verticals.  Refuses (with a witness) when Phi fails, when
    some row does not describe a nonempty face of every polytope, or when
    some row describes a facet of no polytope.
    """
    a = inst.common_matrix
    if a is None:
        raise ValueError("polytopes do not share a constraint matrix")
    report = check_phi(a, [p.b for p in inst.polytopes])
    if not report.holds:
        raise PhiConditionError(report)
    for j, row in enumerate(a):
        facet_somewhere = False
        for i, p in enumerate(inst.polytopes):
            out = lp.maximize(row, p)
            if out.value != p.b[j]:
                raise RowHypothesisError(
                    f"row {j + 1} describes an empty face of P_{i} "
                    f"(max {out.value} < rhs {p.b[j]})"
                )
            tight = [v for v in inst.vreps[i].points if dot(row, v) == p.b[j]]
            if tight and affine_rank(tight) == inst.d:
                facet_somewhere = True
        if not facet_somewhere:
            raise RowHypothesisError(f"row {j + 1} describes a facet of no polytope")
    b0 = inst.polytopes[0].b
    entries = list(nonvertical_inequalities(inst.d, inst.n))
    for j, row in enumerate(a):
        mu = tuple(b0[j] - inst.polytopes[i].b[j] for i in range(1, inst.n + 1))
        entries.append(
            FacetEntry(LinearInequality(row, mu, b0[j]), (f"common-matrix:row{j}",))
        )
    return FacetList.build(inst.d, inst.n, entries)


def detect_hyperrect(inst: DisjunctionInstance):
    """Recover box bounds when the instance is exactly the [I; -I] form."""
    d = inst.d
    a = inst.common_matrix
    if a is None or len(a) != 2 * d:
        return None
    expected = tuple(unit(d, i) for i in range(d)) + tuple(
        tuple(-x for x in unit(d, i)) for i in range(d)
    )
    if a != expected:
        return None
    bounds = []
    for p in inst.polytopes:
        up = p.b[:d]
        lo = tuple(-x for x in p.b[d:])
        if any(l >= u for l, u in zip(lo, up)):
            return None
        bounds.append((lo, up))
    return bounds


def detect_reflected_simplex(inst: DisjunctionInstance):
    """Recover (d, a, b) when the instance equals a reflected-simplex pair.

    Detection compares extreme point sets, so it is independent of how the
    inequality description is written.
    """
    if inst.n != 1 or inst.d < 3:
        return None
    b_out = lp.maximize(unit(inst.d, 0), inst.polytopes[0])
    a_out = lp.maximize([1] * inst.d, inst.polytopes[1])
    if a_out.status != "optimal" or b_out.status != "optimal" or a_out.value <= 0:
        return None
    a, b = a_out.value, b_out.value
    p0, p1 = _simplex_rows(inst.d, a, b)
    try:
        want = (polyops.extreme_points(p0).points, polyops.extreme_points(p1).points)
    except ValueError:
        return None
    have = tuple(vr.points for vr in inst.vreps)
    return (inst.d, a, b) if have == want else None
