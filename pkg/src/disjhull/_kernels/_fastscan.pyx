# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of disjhull._kernels.reference.

Same contract and same fraction-free elimination; the speedup comes from
typed loop indices and C-level list access around the arbitrary-precision
integer arithmetic.  Selected automatically at import when built; the
pure-Python module remains the reference implementation.
"""

import math
from fractions import Fraction

IMPLEMENTATION = "cython"


def int_rank(rows):
    cdef list work = [list(row_obj) for row_obj in rows]
    cdef Py_ssize_t nrows = len(work)
    if nrows == 0:
        return 0
    cdef Py_ssize_t ncols = len(<list>work[0])
    cdef Py_ssize_t rank = 0, col, r, c, piv
    cdef list wr, wp
    prev = 1
    for col in range(ncols):
        if rank == nrows:
            break
        piv = -1
        for r in range(rank, nrows):
            if (<list>work[r])[col] != 0:
                piv = r
                break
        if piv < 0:
            continue
        if piv != rank:
            work[rank], work[piv] = work[piv], work[rank]
        wp = <list>work[rank]
        p = wp[col]
        for r in range(rank + 1, nrows):
            wr = <list>work[r]
            f = wr[col]
            for c in range(col, ncols):
                wr[c] = (p * wr[c] - f * wp[c]) // prev
        prev = p
        rank += 1
    return rank


cdef _hyperplane(list pts, idx, Py_ssize_t dim):
    """Canonical (a_1, ..., a_D, rho) through the chosen points, or None."""
    cdef Py_ssize_t ncols = dim + 1
    cdef list work = []
    cdef list row_list
    cdef Py_ssize_t i, r, c, col, piv, nrows, rank
    for i in idx:
        row_list = list(<tuple>pts[i])
        row_list.append(1)
        work.append(row_list)
    nrows = len(work)
    cdef list piv_rows = [], piv_cols = []
    cdef list wr, wp
    prev = 1
    rank = 0
    for col in range(ncols):
        if rank == nrows:
            break
        piv = -1
        for r in range(rank, nrows):
            if (<list>work[r])[col] != 0:
                piv = r
                break
        if piv < 0:
            continue
        if piv != rank:
            work[rank], work[piv] = work[piv], work[rank]
        wp = <list>work[rank]
        p = wp[col]
        for r in range(nrows):
            if r == rank:
                continue
            wr = <list>work[r]
            f = wr[col]
            for c in range(ncols):
                wr[c] = (p * wr[c] - f * wp[c]) // prev
        prev = p
        piv_rows.append(rank)
        piv_cols.append(col)
        rank += 1
    if rank < dim:
        return None
    cdef Py_ssize_t free = 0
    for c in range(ncols):
        if c not in piv_cols:
            free = c
            break
    cdef list sol = [Fraction(0)] * ncols
    sol[free] = Fraction(1)
    for i in range(rank):
        r = <Py_ssize_t>piv_rows[i]
        c = <Py_ssize_t>piv_cols[i]
        wr = <list>work[r]
        sol[c] = Fraction(-wr[free], wr[c])
    scale = 1
    for c in range(ncols):
        scale = scale * (<object>sol[c]).denominator // math.gcd(scale, (<object>sol[c]).denominator)
    cdef list ints = [0] * ncols
    for c in range(ncols):
        ints[c] = int(sol[c] * scale)
    g = 0
    for c in range(ncols):
        g = math.gcd(g, ints[c])
    for c in range(ncols):
        ints[c] = ints[c] // g
    lead = 0
    for c in range(dim):
        if ints[c] != 0:
            lead = ints[c]
            break
    if lead < 0:
        for c in range(ncols):
            ints[c] = -ints[c]
    ints[dim] = -ints[dim]
    return tuple(ints)


def hyperplane_ints(points, idx):
    cdef list pts = [tuple(p) for p in points]
    return _hyperplane(pts, idx, len(<tuple>pts[idx[0]]))


def scan_candidates(points, candidates):
    cdef list pts = [tuple(p) for p in points]
    cdef Py_ssize_t npts = len(pts)
    if npts == 0:
        return {}
    cdef Py_ssize_t dim = len(<tuple>pts[0])
    cdef set seen = set()
    cdef dict out = {}
    cdef Py_ssize_t j, c
    cdef bint above, below
    cdef list tight
    cdef tuple key, p, normal
    for idx in candidates:
        key = _hyperplane(pts, idx, dim)
        if key is None or key in seen:
            continue
        seen.add(key)
        normal = key[:dim]
        rho = key[dim]
        above = below = False
        tight = []
        for j in range(npts):
            p = <tuple>pts[j]
            s = normal[0] * p[0]
            for c in range(1, dim):
                s = s + normal[c] * p[c]
            s = s - rho
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
            out[tuple([-v for v in key])] = tuple(tight)
        else:
            out[key] = tuple(tight)
    return out
