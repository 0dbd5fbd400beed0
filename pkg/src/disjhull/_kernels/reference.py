"""Pure-Python kernels for the combinatorial hull scans.

These are the hot inner loops of facet enumeration: candidate point
subsets are turned into hyperplanes by fraction-free (Bareiss-style)
elimination over arbitrary-precision integers, then screened for
validity against the full point set.  A compiled twin of this module
lives in _fastscan.pyx; both implement exactly the same contract and
the test suite cross-checks them against the Fraction-based reference
routines in ratgeom.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

IMPLEMENTATION = "pure"


def int_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank of an integer matrix via fraction-free Gaussian elimination."""
    work = [list(r) for r in rows]
    if not work:
        return 0
    ncols = len(work[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        if rank == len(work):
            break
        piv = next((r for r in range(rank, len(work)) if work[r][col]), None)
        if piv is None:
            continue
        if piv != rank:
            work[rank], work[piv] = work[piv], work[rank]
        p = work[rank][col]
        for r in range(rank + 1, len(work)):
            f = work[r][col]
            wr = work[r]
            wp = work[rank]
            for c in range(col, ncols):
                wr[c] = (p * wr[c] - f * wp[c]) // prev
        prev = p
        rank += 1
    return rank


def hyperplane_ints(points: Sequence[Sequence[int]], idx: Sequence[int]):
    """Hyperplane through the D points ``points[i] for i in idx`` (dim D).

    Returns the canonical integer tuple (a_1, ..., a_D, rho) describing
    a . p == rho, with gcd 1 and positive leading normal entry, or None
    when the points are affinely dependent.
    """
    dim = len(points[idx[0]])
    ncols = dim + 1
    # Rows (p, 1); seek the nullspace vector (a, -rho).
    work = [list(points[i]) + [1] for i in idx]
    nrows = len(work)
    pivots: list[tuple[int, int]] = []
    row = 0
    prev = 1
    for col in range(ncols):
        if row == nrows:
            break
        piv = next((r for r in range(row, nrows) if work[r][col]), None)
        if piv is None:
            continue
        if piv != row:
            work[row], work[piv] = work[piv], work[row]
        p = work[row][col]
        for r in range(nrows):
            if r == row:
                continue
            f = work[r][col]
            wr = work[r]
            wp = work[row]
            for c in range(ncols):
                wr[c] = (p * wr[c] - f * wp[c]) // prev
        prev = p
        pivots.append((row, col))
        row += 1
    if row < dim:
        return None
    free = next(c for c in range(ncols) if c not in {c for _, c in pivots})
    sol = [Fraction(0)] * ncols
    sol[free] = Fraction(1)
    for r, c in pivots:
        sol[c] = Fraction(-work[r][free], work[r][c])
    scale = math.lcm(*(f.denominator for f in sol))
    ints = [int(f * scale) for f in sol]
    g = math.gcd(*ints)
    ints = [x // g for x in ints]
    lead = next((x for x in ints[:dim] if x), 0)
    if lead < 0:
        ints = [-x for x in ints]
    ints[dim] = -ints[dim]  # stored as (a, rho)
    return tuple(ints)


def scan_candidates(
    points: Sequence[Sequence[int]],
    candidates: Iterable[Sequence[int]],
) -> dict[tuple[int, ...], tuple[int, ...]]:
    """Scan candidate D-subsets of integer points for valid inequalities.

    For each candidate index subset, computes the hyperplane through the
    points (skipping affinely dependent subsets and hyperplanes already
    seen), orients it so every point satisfies a . p <= rho, and records
    the tight point indices.  Candidates whose hyperplane strictly
    separates the point set are dropped.

    Returns {(a_1, ..., a_D, rho): (tight point indices)}.
    """
    seen: set[tuple[int, ...]] = set()
    out: dict[tuple[int, ...], tuple[int, ...]] = {}
    pts = [tuple(p) for p in points]
    for idx in candidates:
        key = hyperplane_ints(pts, idx)
        if key is None or key in seen:
            continue
        seen.add(key)
        normal = key[:-1]
        rho = key[-1]
        above = below = False
        tight = []
        for j, p in enumerate(pts):
            s = sum(a * x for a, x in zip(normal, p)) - rho
            if s > 0:
                above = True
                if below:
                    break
            elif s < 0:
                below = True
                if above:
                    break
            else:
                tight.append(j)
        if above and below:
            continue
        if above:
            oriented = tuple(-v for v in key)
        else:
            oriented = key
        out[oriented] = tuple(tight)
    return out
