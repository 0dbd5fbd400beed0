"""MIR inequalities, nonnegative aggregation, and the reflection involution.

The rounding step works on a base inequality alpha.x + gamma.z <= beta that
is valid over nonnegative x and binary z.  With f0 the fractional part of
beta and f_j the fractional part of gamma_j, the MIR inequality is

  sum_j (floor(gamma_j) + (f_j - f0)^+ / (1 - f0)) z_j
      + (1 / (1 - f0)) * sum_{i : alpha_i < 0} alpha_i x_i  <=  floor(beta).

Aggregating lifted facet inequalities with suitable weights and rounding
recovers, for the reflected-simplex family, every facet that lifting alone
misses; the upper family follows by the unimodular involution
x -> b - x, z -> 1 - z that swaps the two polytopes.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import families
from .lifting import DisjunctionInstance, lift_from_p0, lift_from_pk
from .polyops import FacetEntry, FacetList, LinearInequality, canonicalize
from .ratgeom import rat, unit, zeros


class MirPreconditionError(ValueError):
    """The MIR form does not apply (x >= 0 or base validity fails)."""


@dataclass(frozen=True)
class MirInput:
    """A base inequality decomposed for rounding: fractional parts of rhs and z-coefficients."""

    base: LinearInequality
    f0: Fraction
    fj: tuple[Fraction, ...]


def aggregate(qs: Sequence[LinearInequality], w: Sequence) -> LinearInequality:
    """Coefficientwise nonnegative combination sum_i w_i q_i.

    Validity is preserved: a nonnegative combination of inequalities valid
    for the hull is valid for the hull.  The result is returned unscaled.
    """
    if not qs:
        raise ValueError("empty aggregation")
    weights = [rat(x) for x in w]
    if len(weights) != len(qs):
        raise ValueError("weight count does not match inequality count")
    if any(x < 0 for x in weights):
        raise ValueError("negative aggregation weight")
    if all(x == 0 for x in weights):
        raise ValueError("all aggregation weights are zero")
    dims = {(len(q.alpha), len(q.mu)) for q in qs}
    if len(dims) != 1:
        raise ValueError("inequalities of mixed dimensions")
    d, n = dims.pop()
    alpha = [Fraction(0)] * d
    mu = [Fraction(0)] * n
    rho = Fraction(0)
    for q, wi in zip(qs, weights):
        for i in range(d):
            alpha[i] += wi * q.alpha[i]
        for j in range(n):
            mu[j] += wi * q.mu[j]
        rho += wi * q.rho
    return LinearInequality(tuple(alpha), tuple(mu), rho)


def mir_input(base: LinearInequality) -> MirInput:
    f0 = base.rho - math.floor(base.rho)
    fj = tuple(g - math.floor(g) for g in base.mu)
    return MirInput(base, f0, fj)


def _mir_formula(base: LinearInequality) -> LinearInequality:
    """The rounding formula itself, with no validity screening."""
    data = mir_input(base)
    one_minus = 1 - data.f0
    mu = tuple(
        Fraction(math.floor(g)) + max(f - data.f0, Fraction(0)) / one_minus
        for g, f in zip(base.mu, data.fj)
    )
    alpha = tuple(a / one_minus if a < 0 else Fraction(0) for a in base.alpha)
    return canonicalize(LinearInequality(alpha, mu, Fraction(math.floor(base.rho))))


def mir(base: LinearInequality, inst: DisjunctionInstance) -> LinearInequality:
    """MIR inequality of a base inequality valid for the hull.

    Preconditions are checked against all lifted extreme points: the base
    must be valid, and every x-coordinate of the instance must be
    nonnegative (the rounding is only sound over R^d_+).  The output is
    canonical and its validity is verified before returning.
    """
    pts = inst.lifted_points
    if any(c < 0 for pt in pts for c in pt.x):
        raise MirPreconditionError("x >= 0 is not valid for the instance")
    if not inst.valid_for_hull(base):
        raise MirPreconditionError("base inequality is not valid for the hull")
    cut = _mir_formula(base)
    if not inst.valid_for_hull(cut):
        raise AssertionError("MIR output failed validity verification")
    return cut


def involute(q: LinearInequality, b) -> LinearInequality:
    """Substitute x_i -> b - x_i and z_1 -> 1 - z_1 (two-polytope setting).

    An affine unimodular involution: applying it twice returns the
    canonical form of q.
    """
    if len(q.mu) != 1:
        raise ValueError("involution applies only to n = 1 instances")
    b = rat(b)
    alpha = tuple(-a for a in q.alpha)
    mu = (-q.mu[0],)
    rho = q.rho - b * sum(q.alpha) - q.mu[0]
    return canonicalize(LinearInequality(alpha, mu, rho))


def derive_reflected_simplex_cuts(d: int, a, b) -> FacetList:
    """All non-lifting facets of the reflected-simplex hull, via MIR.

    Follows the aggregation recipes case by case (on the sign of
    a - (d+1-m) b), rounding the lower family and reflecting it onto the
    upper one; every output is verified valid on the lifted extreme
    points.  The aggregation inputs are computed by the lifting LPs on
    the generated instance, not hard-coded.
    """
    a = rat(a)
    b = rat(b)
    inst = families.gen_reflected_simplex(d, a, b)
    p0, p1 = inst.polytopes

    upper = [
        lift_from_p0(LinearInequality(p0.A[i], (), p0.b[i]), inst).lifted for i in range(d)
    ]
    lower_sum = lift_from_p0(LinearInequality(p0.A[d], (), p0.b[d]), inst).lifted
    neg = [
        lift_from_pk(LinearInequality(p1.A[i], (), p1.b[i]), 1, inst).lifted for i in range(d)
    ]
    z_nonneg = LinearInequality(zeros(d), tuple(-u for u in unit(1, 0)), Fraction(0))

    entries = []
    for m in range(2, d):
        t = d + 1 - m
        for t0 in itertools.combinations(range(d), t):
            gap = a - t * b
            if gap < 0:
                div = t * b + (m - 2) * a
                qs = [upper[i] for i in range(d) if i not in t0] + [lower_sum]
                base = aggregate(qs, [Fraction(1) / div] * len(qs))
            elif gap > 0:
                r = (a * t - b * t + gap) / 2
                base = aggregate([neg[i] for i in t0], [Fraction(1) / r] * t)
            else:
                r = (d - m) * a + 1
                qs = [neg[i] for i in t0] + [z_nonneg]
                base = aggregate(qs, [Fraction(1) / r] * t + [(d - m) * a / r])
            cut = _mir_formula(base)
            if not inst.valid_for_hull(cut):
                raise AssertionError("derived cut failed validity verification")
            label = f"mir:m{m}:T0({','.join(str(i + 1) for i in t0)})"
            entries.append(FacetEntry(cut, (label,)))
            mirrored = involute(cut, b)
            if not inst.valid_for_hull(mirrored):
                raise AssertionError("reflected cut failed validity verification")
            entries.append(FacetEntry(mirrored, (label + ":reflected",)))
    return FacetList.build(d, 1, entries)
