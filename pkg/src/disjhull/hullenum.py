"""Complete facet enumeration of the disjunction hull.

Two independent routes are provided.  enumerate_facets runs the
fixed-dimension signature algorithm: every vertical facet is spanned by
d+n affinely independent lifted extreme points whose per-polytope counts
form a signature (sigma_0, ..., sigma_n) with 1 <= sigma_i <= d, so
scanning all point selections that follow some signature finds every
vertical facet; the non-vertical candidates z_j >= 0 and sum z <= 1 are
tested separately.  oracle_hull ignores signatures entirely and scans
every (d+n)-subset of lifted extreme points, which certifies the
signature route on desk-scale instances.

Both routes screen candidate hyperplanes the same way: keep an oriented
hyperplane iff it is valid on all lifted extreme points and its tight
points have affine rank d+n (validity alone admits lower-dimensional
faces).  The scans run on integer-scaled coordinates through the
compiled kernels when available.
"""

from __future__ import annotations

import itertools
import math
import os
from dataclasses import dataclass
from fractions import Fraction

from . import _kernels as kernels
from . import lifting as _lifting
from .lifting import DisjunctionInstance, full_lifting_system
from .polyops import FacetEntry, FacetList, LinearInequality, canonical_key, is_facet_of_hull

ORACLE_CAP_ENV = "DISJHULL_ORACLE_CAP"
DEFAULT_ORACLE_CAP = 10**7


class OracleCapExceeded(RuntimeError):
    """The brute-force oracle would enumerate too many candidate subsets."""


@dataclass(frozen=True)
class Signature:
    """Counts of tight extreme points per polytope on a vertical facet."""

    sigma: tuple[int, ...]


def enumerate_signatures(d: int, n: int) -> list[Signature]:
    """All compositions of n+d into n+1 parts, each within [1, d]."""
    if d < 1 or n < 1:
        raise ValueError("need d >= 1 and n >= 1")
    out: list[Signature] = []

    def grow(prefix: list[int], remaining: int, slots: int):
        if slots == 1:
            if 1 <= remaining <= d:
                out.append(Signature(tuple(prefix) + (remaining,)))
            return
        lo = max(1, remaining - d * (slots - 1))
        hi = min(d, remaining - (slots - 1))
        for v in range(lo, hi + 1):
            grow(prefix + [v], remaining - v, slots - 1)

    grow([], n + d, n + 1)
    return out


def _scaled_points(inst: DisjunctionInstance) -> tuple[list[tuple[int, ...]], int]:
    """Lifted extreme points as integer vectors (all coordinates times L)."""
    pts = [p.coords for p in inst.lifted_points]
    scale = math.lcm(*(c.denominator for p in pts for c in p))
    return [tuple(int(c * scale) for c in p) for p in pts], scale


def _unscale(key: tuple[int, ...], d: int, n: int, scale: int) -> LinearInequality:
    """Inequality a.y <= rho over scaled y = scale * (x, z) back to (x, z)."""
    coeffs = tuple(Fraction(a * scale) for a in key[:-1])
    return LinearInequality(coeffs[:d], coeffs[d:], Fraction(key[-1]))


def _rank_filter(scaled, results, dim):
    """Yield (key, tight) for scan results whose tight set spans a facet."""
    for key, tight in results.items():
        if len(tight) < dim:
            continue
        base = scaled[tight[0]]
        rows = [
            [a - b for a, b in zip(scaled[j], base)]
            for j in tight[1:]
        ]
        if kernels.int_rank(rows) == dim - 1:
            yield key, tight


def enumerate_facets(inst: DisjunctionInstance) -> FacetList:
    """All facets of the hull, via the signature algorithm."""
    dim = inst.d + inst.n
    pts = inst.lifted_points
    entries = [
        e
        for e in _lifting.nonvertical_inequalities(inst.d, inst.n)
        if is_facet_of_hull(pts, e.ineq, dim)
    ]

    lifting_by_key = {
        canonical_key(e.ineq): e for e in full_lifting_system(inst).entries
    }
    scaled, scale = _scaled_points(inst)
    groups = []
    start = 0
    for vr in inst.vreps:
        groups.append(range(start, start + len(vr.points)))
        start += len(vr.points)

    found: set[tuple[int, ...]] = set()
    for sig in enumerate_signatures(inst.d, inst.n):
        selections = itertools.product(
            *(itertools.combinations(g, s) for g, s in zip(groups, sig.sigma))
        )
        candidates = (tuple(itertools.chain.from_iterable(sel)) for sel in selections)
        results = kernels.scan_candidates(scaled, candidates)
        for key, _tight in _rank_filter(scaled, results, dim):
            if key in found:
                continue
            found.add(key)
            ineq = _unscale(key, inst.d, inst.n, scale)
            known = lifting_by_key.get(canonical_key(ineq))
            prov = known.provenance if known else (f"signature:{','.join(map(str, sig.sigma))}",)
            entries.append(FacetEntry(ineq, prov, sig.sigma))
    return FacetList.build(inst.d, inst.n, entries)


def oracle_cap() -> int:
    raw = os.environ.get(ORACLE_CAP_ENV)
    return int(raw) if raw else DEFAULT_ORACLE_CAP


def oracle_hull(inst: DisjunctionInstance) -> FacetList:
    """Brute-force certification hull: scan all (d+n)-subsets of points.

    Independent of the signature logic; refuses to run when the number of
    candidate subsets exceeds the configured cap (DISJHULL_ORACLE_CAP).
    """
    dim = inst.d + inst.n
    scaled, scale = _scaled_points(inst)
    total = math.comb(len(scaled), dim)
    cap = oracle_cap()
    if total > cap:
        raise OracleCapExceeded(f"{total} candidate subsets exceed the cap of {cap}")
    results = kernels.scan_candidates(scaled, itertools.combinations(range(len(scaled)), dim))
    entries = [
        FacetEntry(_unscale(key, inst.d, inst.n, scale), ("oracle",))
        for key, _tight in _rank_filter(scaled, results, dim)
    ]
    return FacetList.build(inst.d, inst.n, entries)


@dataclass(frozen=True)
class CompareReport:
    equal: bool
    only_in_a: tuple[LinearInequality, ...]
    only_in_b: tuple[LinearInequality, ...]


def compare(a: FacetList, b: FacetList) -> CompareReport:
    """Set comparison of two facet lists on canonical forms."""
    if (a.d, a.n) != (b.d, b.n):
        raise ValueError("facet lists live in different spaces")
    keys_a = {canonical_key(e.ineq): e.ineq for e in a.entries}
    keys_b = {canonical_key(e.ineq): e.ineq for e in b.entries}
    only_a = tuple(keys_a[k] for k in sorted(keys_a.keys() - keys_b.keys()))
    only_b = tuple(keys_b[k] for k in sorted(keys_b.keys() - keys_a.keys()))
    return CompareReport(not only_a and not only_b, only_a, only_b)
