"""Full optimal big-M lifting of valid inequalities to the extended space.

Given a disjunction of polytopes P_0, ..., P_n and a valid inequality
alpha.x <= beta of one of them, the optimal lifting coefficient for each
other polytope is the exact LP value M_i = min{beta - alpha.x : x in P_i}.
Because sum z_i <= 1 holds, the lifting order never matters and a single
closed form per case gives the full lifting:

  from P_0:   alpha.x + sum_i M_i z_i <= beta
  from P_k:   alpha.x + sum_{i != k} (M_i - M_0) z_i - M_0 z_k <= beta - M_0
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Optional, Sequence

from . import lp, polyops
from .polyops import (
    EmptyPolytopeError,
    FacetEntry,
    FacetList,
    HPolytope,
    LinearInequality,
    UnboundedPolytopeError,
)
from .ratgeom import LiftedPoint, Matrix, Vector, unit, zeros


@dataclass(frozen=True)
class DisjunctionInstance:
    """The tuple (d, n, P_0, ..., P_n) defining the disjunction hull.

    Construction validates the standing hypotheses: every polytope is
    nonempty and bounded, and at least one is full dimensional.
    """

    d: int
    n: int
    polytopes: tuple[HPolytope, ...]

    def __post_init__(self):
        if self.d < 1 or self.n < 1:
            raise ValueError("need d >= 1 and n >= 1")
        if len(self.polytopes) != self.n + 1:
            raise ValueError("expected n + 1 polytopes")
        if any(p.d != self.d for p in self.polytopes):
            raise ValueError("polytope dimension mismatch")
        for i, p in enumerate(self.polytopes):
            if polyops.is_empty(p):
                raise EmptyPolytopeError(f"P_{i} is empty")
            if not polyops.is_bounded(p):
                raise UnboundedPolytopeError(f"P_{i} is unbounded")
        if not any(self.full_dimensional):
            raise ValueError("no polytope is full dimensional")

    @cached_property
    def full_dimensional(self) -> tuple[bool, ...]:
        return tuple(polyops.is_full_dimensional(p) for p in self.polytopes)

    @cached_property
    def vreps(self) -> tuple[polyops.VRep, ...]:
        return tuple(polyops.extreme_points(p) for p in self.polytopes)

    def z_of(self, i: int) -> Vector:
        """The z-part of points lifted from P_i (e_0 is the zero vector)."""
        return zeros(self.n) if i == 0 else unit(self.n, i - 1)

    @cached_property
    def lifted_points(self) -> tuple[LiftedPoint, ...]:
        """All lifted extreme points (x, e_i), grouped by polytope index.

        These are exactly the extreme points of the disjunction hull.
        """
        out = []
        for i, vr in enumerate(self.vreps):
            z = self.z_of(i)
            out.extend(LiftedPoint(x, z) for x in vr.points)
        return tuple(out)

    @cached_property
    def lifted_owners(self) -> tuple[int, ...]:
        return tuple(i for i, vr in enumerate(self.vreps) for _ in vr.points)

    @cached_property
    def irredundant(self) -> tuple[HPolytope, ...]:
        return tuple(polyops.remove_redundant(p) for p in self.polytopes)

    @cached_property
    def common_matrix(self) -> Optional[Matrix]:
        """The shared constraint matrix, when all polytopes use one."""
        first = self.polytopes[0].A
        if all(p.A == first for p in self.polytopes[1:]):
            return first
        return None

    def valid_for_hull(self, q: LinearInequality) -> bool:
        return all(q.satisfied_by(pt) for pt in self.lifted_points)


@dataclass(frozen=True)
class LiftingResult:
    """A full optimal big-M lifting of one source inequality.

    M holds the n+1 lifting LP values (M_k = 0 by convention for the
    origin polytope k); lifted is the resulting inequality over (x, z).
    """

    origin_k: int
    source: LinearInequality
    M: tuple[Fraction, ...]
    lifted: LinearInequality


def _x_only(q: LinearInequality) -> LinearInequality:
    if any(c != 0 for c in q.mu):
        raise ValueError("source inequality must be over x only")
    return q


def _lifting_values(q: LinearInequality, inst: DisjunctionInstance, k: int) -> list[Fraction]:
    """M_i = beta - max{alpha.x : x in P_i} for i != k; M_k = 0."""
    values = []
    for i, p in enumerate(inst.polytopes):
        if i == k:
            values.append(Fraction(0))
            continue
        out = lp.maximize(q.alpha, p)
        if out.status != "optimal":
            raise AssertionError(f"lifting LP over nonempty polytope P_{i} not optimal")
        values.append(q.rho - out.value)
    return values


def _check_valid_for(q: LinearInequality, p: HPolytope, k: int):
    out = lp.maximize(q.alpha, p)
    if out.status != "optimal" or out.value > q.rho:
        raise ValueError(f"inequality is not valid for P_{k}")


def lift_from_p0(q: LinearInequality, inst: DisjunctionInstance) -> LiftingResult:
    """Case 1: lift a valid inequality of P_0 to alpha.x + sum M_i z_i <= beta."""
    q = _x_only(q)
    _check_valid_for(q, inst.polytopes[0], 0)
    m = _lifting_values(q, inst, 0)
    lifted = LinearInequality(q.alpha, tuple(m[1:]), q.rho)
    return LiftingResult(0, q, tuple(m), lifted)


def lift_from_pk(q: LinearInequality, k: int, inst: DisjunctionInstance) -> LiftingResult:
    """Case 2: lift a valid inequality of P_k (k in 1..n).

    Gathering terms gives
    alpha.x + sum_{i != k} (M_i - M_0) z_i - M_0 z_k <= beta - M_0.
    """
    if not 1 <= k <= inst.n:
        raise ValueError("k must index one of P_1..P_n")
    q = _x_only(q)
    _check_valid_for(q, inst.polytopes[k], k)
    m = _lifting_values(q, inst, k)
    mu = [m[i] - m[0] for i in range(1, inst.n + 1)]
    mu[k - 1] = -m[0]
    lifted = LinearInequality(q.alpha, tuple(mu), q.rho - m[0])
    return LiftingResult(k, q, tuple(m), lifted)


def lift_row(inst: DisjunctionInstance, i: int, q: LinearInequality) -> LiftingResult:
    return lift_from_p0(q, inst) if i == 0 else lift_from_pk(q, i, inst)


def nonvertical_inequalities(d: int, n: int) -> list[FacetEntry]:
    """z_j >= 0 for j in N, and sum_j z_j <= 1, in <= form."""
    entries = []
    for j in range(1, n + 1):
        q = LinearInequality(zeros(d), tuple(-u for u in unit(n, j - 1)), Fraction(0))
        entries.append(FacetEntry(q, (f"nonvertical:z{j}>=0",)))
    q = LinearInequality(zeros(d), (Fraction(1),) * n, Fraction(1))
    entries.append(FacetEntry(q, ("nonvertical:sum_z<=1",)))
    return entries


def full_lifting_system(inst: DisjunctionInstance) -> FacetList:
    """Lift every facet row of every polytope; append the non-verticals.

    Source inequalities are the rows of the irredundant descriptions only.
    Distinct source rows may lift to the same inequality; duplicates are
    merged with all provenances retained.
    """
    entries = list(nonvertical_inequalities(inst.d, inst.n))
    for i, p in enumerate(inst.irredundant):
        for r in range(p.m):
            q = LinearInequality(p.A[r], (), p.b[r])
            res = lift_row(inst, i, q)
            entries.append(FacetEntry(res.lifted, (f"lifting:p{i}:row{r}",)))
    return FacetList.build(inst.d, inst.n, entries)
