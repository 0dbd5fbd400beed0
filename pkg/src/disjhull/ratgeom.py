"""Exact rational linear algebra and affine-geometry primitives.

Everything downstream (LP, polytope operations, facet enumeration) is
built on the functions here.  All arithmetic is over ``fractions.Fraction``;
no floating point is used anywhere.  Vectors are tuples of Fractions,
matrices are tuples of row tuples.  All functions are pure, so the whole
module is safe for concurrent use.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Fraction
Vector = tuple[Fraction, ...]
Matrix = tuple[Vector, ...]


def rat(x: Union[int, str, Fraction]) -> Fraction:
    """Coerce an int, ``"p/q"`` string, or Fraction to an exact Fraction."""
    return x if isinstance(x, Fraction) else Fraction(x)


def vec(entries: Iterable) -> Vector:
    return tuple(rat(x) for x in entries)


def mat(rows: Iterable[Iterable]) -> Matrix:
    """Build a rectangular matrix, validating consistent row widths."""
    out = tuple(vec(r) for r in rows)
    if out and any(len(r) != len(out[0]) for r in out):
        raise ValueError("inconsistent row widths")
    return out


def zeros(k: int) -> Vector:
    return (Fraction(0),) * k


def unit(k: int, i: int) -> Vector:
    """The i-th standard unit vector of R^k (0-based i)."""
    return tuple(Fraction(1 if j == i else 0) for j in range(k))


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    if len(u) != len(v):
        raise ValueError("dimension mismatch in dot product")
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def mat_vec(m: Matrix, v: Sequence[Fraction]) -> Vector:
    return tuple(dot(row, v) for row in m)


def vec_sub(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


@dataclass(frozen=True)
class LiftedPoint:
    """A point (x, z) of the extended space R^{d+n}.

    Extreme points of the disjunction hull always carry a z-part that is
    either all zeros (the base polytope) or a 0/1 unit vector.
    """

    x: Vector
    z: Vector

    @property
    def coords(self) -> Vector:
        return self.x + self.z

    def __len__(self) -> int:
        return len(self.x) + len(self.z)


PointLike = Union[LiftedPoint, Sequence[Fraction]]


def _coords(p: PointLike) -> Vector:
    if isinstance(p, LiftedPoint):
        return p.coords
    return tuple(p)


def scale_to_integers(values: Sequence[Fraction]) -> tuple[int, ...]:
    """Scale by the unique positive rational making all entries integer, gcd 1.

    The zero vector is returned unchanged.
    """
    vals = [rat(v) for v in values]
    if all(v == 0 for v in vals):
        return tuple(0 for _ in vals)
    denom_lcm = math.lcm(*(v.denominator for v in vals))
    ints = [int(v * denom_lcm) for v in vals]
    g = math.gcd(*ints)
    return tuple(x // g for x in ints)


def solve_linear_system(m: Matrix, rhs: Sequence[Fraction]):
    """Solve the square system m x = rhs exactly.

    Returns the unique solution vector, or None when m is singular.
    Gaussian elimination with the first nonzero pivot in each column,
    so the computation is deterministic.
    """
    k = len(m)
    if any(len(row) != k for row in m):
        raise ValueError("matrix is not square")
    if len(rhs) != k:
        raise ValueError("rhs length does not match matrix")
    aug = [list(row) + [rat(b)] for row, b in zip(m, rhs)]
    for col in range(k):
        piv = next((r for r in range(col, k) if aug[r][col] != 0), None)
        if piv is None:
            return None
        if piv != col:
            aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        for r in range(k):
            if r == col or aug[r][col] == 0:
                continue
            f = aug[r][col] / p
            for c in range(col, k + 1):
                aug[r][c] -= f * aug[col][c]
    return tuple(aug[i][k] / aug[i][i] for i in range(k))


def matrix_rank(rows: Sequence[Sequence[Fraction]]) -> int:
    """Rank of a rational matrix by exact Gaussian elimination."""
    work = [list(r) for r in rows]
    if not work:
        return 0
    ncols = len(work[0])
    rank = 0
    for col in range(ncols):
        if rank == len(work):
            break
        piv = next((r for r in range(rank, len(work)) if work[r][col] != 0), None)
        if piv is None:
            continue
        work[rank], work[piv] = work[piv], work[rank]
        p = work[rank][col]
        for r in range(rank + 1, len(work)):
            if work[r][col] == 0:
                continue
            f = work[r][col] / p
            for c in range(col, ncols):
                work[r][c] -= f * work[rank][c]
        rank += 1
    return rank


def affine_rank(points: Sequence[PointLike]) -> int:
    """Maximum number of affinely independent points in the list.

    Equals (dimension of the affine hull) + 1; invariant under
    permutation and translation of the point set.
    """
    if not points:
        raise ValueError("affine_rank of an empty point list")
    coords = [_coords(p) for p in points]
    k = len(coords[0])
    if any(len(c) != k for c in coords):
        raise ValueError("points of mixed dimension")
    if len(coords) == 1:
        return 1
    base = coords[0]
    return matrix_rank([vec_sub(c, base) for c in coords[1:]]) + 1


def hyperplane_through(points: Sequence[PointLike]):
    """Hyperplane containing k given points of R^k.

    Returns (normal, rhs) with the points satisfying normal . p == rhs,
    canonicalized to integer entries with gcd 1 and positive leading
    normal entry.  Returns None when the points are affinely dependent
    (the hyperplane is not unique).
    """
    coords = [_coords(p) for p in points]
    k = len(coords[0])
    if len(coords) != k or any(len(c) != k for c in coords):
        raise ValueError("need exactly k points of R^k")
    # Nullspace of the k x (k+1) system (p_i, 1) . (a, -rho) = 0.
    work = [list(c) + [Fraction(1)] for c in coords]
    ncols = k + 1
    pivots: list[tuple[int, int]] = []
    row = 0
    for col in range(ncols):
        if row == k:
            break
        piv = next((r for r in range(row, k) if work[r][col] != 0), None)
        if piv is None:
            continue
        work[row], work[piv] = work[piv], work[row]
        p = work[row][col]
        for r in range(k):
            if r == row or work[r][col] == 0:
                continue
            f = work[r][col] / p
            for c in range(col, ncols):
                work[r][c] -= f * work[row][c]
        pivots.append((row, col))
        row += 1
    if row < k:
        return None
    free = next(c for c in range(ncols) if c not in {c for _, c in pivots})
    w = [Fraction(0)] * ncols
    w[free] = Fraction(1)
    for r, c in pivots:
        w[c] = -work[r][free] / work[r][c]
    ints = scale_to_integers(w)
    lead = next(x for x in ints[:k] if x != 0)
    if lead < 0:
        ints = tuple(-x for x in ints)
    normal = tuple(Fraction(x) for x in ints[:k])
    rho = Fraction(-ints[k])
    return normal, rho
