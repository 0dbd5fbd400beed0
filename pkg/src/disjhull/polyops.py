"""Polytope-level operations and the shared inequality/facet-list types.

An HPolytope is an inequality description A x <= b of a single polytope.
LinearInequality covers both plain x-space inequalities and inequalities
over the extended space (x, z); the z-part is simply empty for the former.
Canonical form (integer coefficients, gcd 1, sense <= preserved) is the
deduplication key used everywhere facets are compared.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from . import lp
from .ratgeom import (
    LiftedPoint,
    Matrix,
    Vector,
    affine_rank,
    dot,
    mat,
    rat,
    scale_to_integers,
    solve_linear_system,
    unit,
    vec,
)


class EmptyPolytopeError(ValueError):
    """Operation requires a nonempty polytope."""


class UnboundedPolytopeError(ValueError):
    """Operation requires a bounded polytope."""


@dataclass(frozen=True)
class HPolytope:
    """The set {x in R^d : A x <= b}."""

    d: int
    A: Matrix
    b: Vector

    def __post_init__(self):
        if any(len(row) != self.d for row in self.A):
            raise ValueError("matrix width does not match dimension")
        if len(self.A) != len(self.b):
            raise ValueError("row count does not match rhs length")

    @staticmethod
    def make(d: int, rows: Iterable[Iterable], rhs: Iterable) -> "HPolytope":
        return HPolytope(d, mat(rows), vec(rhs))

    @property
    def m(self) -> int:
        return len(self.A)

    def contains(self, x: Sequence[Fraction]) -> bool:
        return all(dot(row, x) <= rhs for row, rhs in zip(self.A, self.b))


@dataclass(frozen=True)
class VRep:
    """Deduplicated, lexicographically sorted extreme points."""

    points: tuple[Vector, ...]


@dataclass(frozen=True)
class LinearInequality:
    """alpha . x + mu . z <= rho over R^{d+n}; n may be zero."""

    alpha: Vector
    mu: Vector
    rho: Fraction

    @staticmethod
    def make(alpha: Iterable, mu: Iterable, rho) -> "LinearInequality":
        return LinearInequality(vec(alpha), vec(mu), rat(rho))

    @staticmethod
    def on_x(alpha: Iterable, rho) -> "LinearInequality":
        return LinearInequality(vec(alpha), (), rat(rho))

    @property
    def coeffs(self) -> Vector:
        return self.alpha + self.mu

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def value_at(self, point) -> Fraction:
        coords = point.coords if isinstance(point, LiftedPoint) else tuple(point)
        return dot(self.coeffs, coords)

    def satisfied_by(self, point) -> bool:
        return self.value_at(point) <= self.rho

    def tight_at(self, point) -> bool:
        return self.value_at(point) == self.rho

    def __str__(self) -> str:
        terms = []
        for base, coeffs in (("x", self.alpha), ("z", self.mu)):
            for i, c in enumerate(coeffs):
                if c == 0:
                    continue
                mag = abs(c)
                body = f"{base}{i + 1}" if mag == 1 else f"{mag}*{base}{i + 1}"
                terms.append(("-" if c < 0 else "+", body))
        if not terms:
            lhs = "0"
        else:
            sign, body = terms[0]
            lhs = ("-" if sign == "-" else "") + body
            for sign, body in terms[1:]:
                lhs += f" {sign} {body}"
        return f"{lhs} <= {self.rho}"


def canonicalize(q: LinearInequality) -> LinearInequality:
    """Scale by the unique positive rational giving integer entries, gcd 1.

    The sense <= is preserved (no sign flip), so canonical forms are the
    deduplication key for facet comparison.  Idempotent.
    """
    if q.is_zero():
        raise ValueError("cannot canonicalize the zero inequality")
    ints = scale_to_integers(q.coeffs + (q.rho,))
    d = len(q.alpha)
    return LinearInequality(
        tuple(Fraction(v) for v in ints[:d]),
        tuple(Fraction(v) for v in ints[d:-1]),
        Fraction(ints[-1]),
    )


def canonical_key(q: LinearInequality) -> tuple[int, ...]:
    cq = canonicalize(q)
    return tuple(int(v) for v in cq.coeffs + (cq.rho,))


@dataclass(frozen=True)
class FacetEntry:
    ineq: LinearInequality
    provenance: tuple[str, ...]
    signature: Optional[tuple[int, ...]] = None

    @property
    def kind(self) -> str:
        """Coarse class for report counts: nonvertical / lifting / other."""
        if any(p.startswith("nonvertical") for p in self.provenance):
            return "nonvertical"
        if any(p.startswith("lifting") or p.startswith("common-matrix") for p in self.provenance):
            return "lifting"
        return "other"


@dataclass(frozen=True)
class FacetList:
    """Sorted, deduplicated list of canonical facet-describing inequalities."""

    d: int
    n: int
    entries: tuple[FacetEntry, ...] = field(default_factory=tuple)

    @staticmethod
    def build(d: int, n: int, items: Iterable[FacetEntry]) -> "FacetList":
        merged: dict[tuple[int, ...], FacetEntry] = {}
        for entry in items:
            cq = canonicalize(entry.ineq)
            key = canonical_key(cq)
            if key in merged:
                prev = merged[key]
                prov = prev.provenance + tuple(
                    p for p in entry.provenance if p not in prev.provenance
                )
                merged[key] = FacetEntry(prev.ineq, prov, prev.signature or entry.signature)
            else:
                merged[key] = FacetEntry(cq, entry.provenance, entry.signature)
        ordered = tuple(merged[k] for k in sorted(merged))
        return FacetList(d, n, ordered)

    def keys(self) -> set[tuple[int, ...]]:
        return {canonical_key(e.ineq) for e in self.entries}

    def counts(self) -> dict[str, int]:
        out = {"nonvertical": 0, "lifting": 0, "other": 0}
        for e in self.entries:
            out[e.kind] += 1
        return out

    def __len__(self) -> int:
        return len(self.entries)


def is_empty(p: HPolytope) -> bool:
    return lp.maximize([0] * p.d, p).status == "infeasible"


def is_bounded(p: HPolytope) -> bool:
    """True iff every coordinate has a finite range over p (or p is empty)."""
    for i in range(p.d):
        for sign in (1, -1):
            c = [sign * u for u in unit(p.d, i)]
            out = lp.maximize(c, p)
            if out.status == "infeasible":
                return True
            if out.status == "unbounded":
                return False
    return True


def is_full_dimensional(p: HPolytope) -> bool:
    """True iff some point satisfies every inequality strictly.

    Decided by one LP maximizing a uniform slack margin t over
    A x + t e <= b; full dimensional iff the margin is positive
    (an unbounded margin also certifies an interior point).
    """
    aug = HPolytope(
        p.d + 1,
        tuple(row + (Fraction(1),) for row in p.A),
        p.b,
    )
    c = [Fraction(0)] * p.d + [Fraction(1)]
    out = lp.maximize(c, aug)
    if out.status == "unbounded":
        return True
    return out.status == "optimal" and out.value > 0


def extreme_points(p: HPolytope) -> VRep:
    """All extreme points, by exhaustive basic-partition enumeration.

    For each d-subset of rows with A_tau invertible, the basic solution
    A_tau^-1 b_tau is kept when it satisfies the remaining rows.
    """
    if is_empty(p):
        raise EmptyPolytopeError("polytope is empty")
    if not is_bounded(p):
        raise UnboundedPolytopeError("polytope is unbounded")
    found = set()
    for combo in itertools.combinations(range(p.m), p.d):
        rows = tuple(p.A[i] for i in combo)
        rhs = vec(p.b[i] for i in combo)
        x = solve_linear_system(rows, rhs)
        if x is not None and p.contains(x):
            found.add(x)
    return VRep(tuple(sorted(found)))


def remove_redundant(p: HPolytope) -> HPolytope:
    """Drop every row whose removal does not enlarge the feasible set.

    Row j is kept iff max A_j . x over the remaining rows exceeds b_j
    (or is unbounded).  Rows are tested in order against the currently
    kept system, so duplicate rows collapse to a single copy.  Idempotent.
    """
    if is_empty(p):
        raise EmptyPolytopeError("polytope is empty")
    keep = list(range(p.m))
    for j in list(keep):
        others = [i for i in keep if i != j]
        sub = HPolytope(p.d, tuple(p.A[i] for i in others), vec(p.b[i] for i in others))
        out = lp.maximize(p.A[j], sub)
        if out.status == "optimal" and out.value <= p.b[j]:
            keep = others
    return HPolytope(p.d, tuple(p.A[i] for i in keep), vec(p.b[i] for i in keep))


def face_tight_points(points: Sequence[LiftedPoint], q: LinearInequality):
    """(valid on all points, sublist of points satisfying q with equality)."""
    valid = True
    tight = []
    for pt in points:
        v = q.value_at(pt)
        if v > q.rho:
            valid = False
        elif v == q.rho:
            tight.append(pt)
    return valid, tight


def is_facet_of_hull(points: Sequence[LiftedPoint], q: LinearInequality, dim: int) -> bool:
    """Facet test for the hull of the given points in R^dim.

    q describes a facet iff it is valid on every point and its tight
    points have affine rank dim (i.e. span a (dim-1)-dimensional face).
    """
    valid, tight = face_tight_points(points, q)
    return valid and bool(tight) and affine_rank(tight) == dim
