"""Exact rational linear programming over inequality form.

Solves max c.x subject to A x <= b (x free) with a two-phase primal
simplex on the standard-form split x = u - v.  All pivoting follows
Bland's least-index rule, so every outcome -- including the reported
optimal basic partition -- is deterministic.  Optimal outcomes carry an
exactly verified primal/dual pair; infeasible and unbounded outcomes
carry exact certificates (a Farkas vector, respectively a ray).

A basic partition (tau, eta) splits the row indices so that A_tau is
invertible; the associated primal basic solution is A_tau^-1 b_tau.
Row indices in partitions are 1-based, matching the usual notation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .ratgeom import Matrix, Vector, dot, mat_vec, matrix_rank, rat, solve_linear_system, vec


@dataclass(frozen=True)
class BasicPartition:
    """Ordered split (tau, eta) of the row indices 1..m with A_tau invertible."""

    tau: tuple[int, ...]
    eta: tuple[int, ...]


@dataclass(frozen=True)
class LpOutcome:
    status: str  # "optimal" | "infeasible" | "unbounded"
    value: Optional[Fraction] = None
    primal: Optional[Vector] = None
    dual: Optional[Vector] = None
    partition: Optional[BasicPartition] = None
    # Farkas vector y (infeasible: y >= 0, yA = 0, yb < 0) or ray r
    # (unbounded: Ar <= 0, cr > 0).
    certificate: Optional[Vector] = None


class _Tableau:
    """Dense simplex tableau for [A' | -A' | I | I_art] w = b', w >= 0."""

    def __init__(self, a_rows: list[list[Fraction]], b: list[Fraction]):
        self.m = len(a_rows)
        self.d = len(a_rows[0]) if a_rows else 0
        self.sign = [Fraction(1)] * self.m
        for i in range(self.m):
            if b[i] < 0:
                self.sign[i] = Fraction(-1)
                a_rows[i] = [-x for x in a_rows[i]]
                b[i] = -b[i]
        d, m = self.d, self.m
        self.n_real = 2 * d + m
        self.n_total = self.n_real + m
        self.art0 = self.n_real
        rows = []
        for i in range(m):
            row = [Fraction(0)] * (self.n_total + 1)
            for j in range(d):
                row[j] = a_rows[i][j]
                row[d + j] = -a_rows[i][j]
            row[2 * d + i] = self.sign[i]  # slack column, sign-adjusted
            row[self.art0 + i] = Fraction(1)
            row[self.n_total] = b[i]
            rows.append(row)
        self.rows = rows
        self.basis = [self.art0 + i for i in range(m)]

    def _reduced_costs(self, cost, allowed):
        lam = [cost[v] for v in self.basis]
        red = {}
        for j in allowed:
            if j in self.basis:
                continue
            z = sum((lam[i] * self.rows[i][j] for i in range(self.m)), Fraction(0))
            red[j] = cost[j] - z
        return red

    def _pivot(self, row, col):
        piv = self.rows[row][col]
        prow = self.rows[row]
        for c in range(self.n_total + 1):
            prow[c] /= piv
        for r in range(self.m):
            if r == row:
                continue
            f = self.rows[r][col]
            if f == 0:
                continue
            rr = self.rows[r]
            for c in range(self.n_total + 1):
                rr[c] -= f * prow[c]
        self.basis[row] = col

    def run(self, cost, allowed):
        """Bland-rule simplex; returns the entering column on unboundedness."""
        while True:
            red = self._reduced_costs(cost, allowed)
            enter = next((j for j in sorted(red) if red[j] > 0), None)
            if enter is None:
                return None
            ratio = None
            leave = None
            for i in range(self.m):
                coef = self.rows[i][enter]
                if coef <= 0:
                    continue
                r = self.rows[i][self.n_total] / coef
                if ratio is None or r < ratio or (r == ratio and self.basis[i] < self.basis[leave]):
                    ratio = r
                    leave = i
            if leave is None:
                return enter
            self._pivot(leave, enter)

    def drive_out_artificials(self):
        for i in range(self.m):
            if self.basis[i] < self.art0:
                continue
            col = next(j for j in range(self.n_real) if self.rows[i][j] != 0)
            self._pivot(i, col)

    def multipliers(self, cost) -> list[Fraction]:
        """Row multipliers c_B B^-1, read off the artificial columns."""
        lam = [cost[v] for v in self.basis]
        return [
            sum((lam[r] * self.rows[r][self.art0 + i] for r in range(self.m)), Fraction(0))
            for i in range(self.m)
        ]

    def solution(self) -> list[Fraction]:
        w = [Fraction(0)] * self.n_total
        for i, v in enumerate(self.basis):
            w[v] = self.rows[i][self.n_total]
        return w


def _check(cond: bool, what: str):
    if not cond:
        raise AssertionError(f"internal LP error: {what}")


def maximize(c: Sequence, poly) -> LpOutcome:
    """Solve max c.x over the H-polyhedron poly (anything with .A and .b).

    The reported partition is the lexicographically first set of d tight
    rows with invertible A_tau, when one exists (it may not, e.g. when the
    optimum is attained on an unbounded face with fewer than d tight rows).
    """
    a: Matrix = poly.A
    b: Vector = poly.b
    c = vec(c)
    m = len(a)
    d = len(c)
    if any(len(row) != d for row in a) or len(b) != m:
        raise ValueError("dimension mismatch between objective and polytope")

    if m == 0:
        if all(x == 0 for x in c):
            return LpOutcome("optimal", Fraction(0), vec([0] * d), vec([]), None)
        return LpOutcome("unbounded", certificate=c)

    tab = _Tableau([list(row) for row in a], [rat(x) for x in b])

    # Phase 1: drive the artificial variables to zero.
    cost1 = [Fraction(0)] * tab.n_real + [Fraction(-1)] * m
    enter = tab.run(cost1, range(tab.n_total))
    _check(enter is None, "phase 1 unbounded")
    w = tab.solution()
    if any(w[tab.art0 + i] != 0 for i in range(m)):
        y1 = tab.multipliers(cost1)
        farkas = vec(s * y for s, y in zip(tab.sign, y1))
        _check(all(y >= 0 for y in farkas), "Farkas sign")
        _check(all(x == 0 for x in mat_vec(tuple(zip(*a)), farkas)), "Farkas yA=0")
        _check(dot(farkas, b) < 0, "Farkas yb<0")
        return LpOutcome("infeasible", certificate=farkas)
    tab.drive_out_artificials()

    # Phase 2 over the real columns only.
    cost2 = [Fraction(0)] * tab.n_total
    for j in range(d):
        cost2[j] = c[j]
        cost2[d + j] = -c[j]
    enter = tab.run(cost2, range(tab.n_real))
    if enter is not None:
        col = [tab.rows[i][enter] for i in range(tab.m)]
        delta = [Fraction(0)] * tab.n_real
        delta[enter] = Fraction(1)
        for i, v in enumerate(tab.basis):
            if v < tab.n_real:
                delta[v] = -col[i]
        ray = vec(delta[j] - delta[d + j] for j in range(d))
        _check(all(x <= 0 for x in mat_vec(a, ray)), "ray direction")
        _check(dot(c, ray) > 0, "ray improvement")
        return LpOutcome("unbounded", certificate=ray)

    w = tab.solution()
    x = vec(w[j] - w[d + j] for j in range(d))
    y1 = tab.multipliers(cost2)
    y = vec(s * yi for s, yi in zip(tab.sign, y1))
    value = dot(c, x)
    _check(all(lhs <= rhs for lhs, rhs in zip(mat_vec(a, x), b)), "primal feasibility")
    _check(all(yi >= 0 for yi in y), "dual sign")
    _check(mat_vec(tuple(zip(*a)), y) == c, "dual feasibility")
    _check(dot(y, b) == value, "strong duality")
    return LpOutcome("optimal", value, x, y, _tight_partition(a, b, x))


def _tight_partition(a: Matrix, b: Vector, x: Vector) -> Optional[BasicPartition]:
    """Lexicographically first d tight rows with A_tau invertible, if any."""
    d = len(x)
    tight = [i for i in range(len(a)) if dot(a[i], x) == b[i]]
    chosen: list[int] = []
    rows: list[Vector] = []
    for i in tight:
        if matrix_rank(rows + [a[i]]) > len(rows):
            rows.append(a[i])
            chosen.append(i)
            if len(chosen) == d:
                break
    if len(chosen) < d:
        return None
    tau = tuple(i + 1 for i in chosen)
    eta = tuple(i for i in range(1, len(a) + 1) if i not in set(tau))
    return BasicPartition(tau, eta)


def enumerate_basic_partitions(a: Matrix) -> list[BasicPartition]:
    """All basic partitions of the rows of a full-column-rank matrix.

    Every d-subset of rows with invertible A_tau appears exactly once,
    in lexicographic order of tau (1-based row indices).
    """
    m = len(a)
    d = len(a[0]) if m else 0
    if matrix_rank(a) < d:
        raise ValueError("matrix does not have full column rank")
    out = []
    for combo in itertools.combinations(range(m), d):
        rows = [a[i] for i in combo]
        if matrix_rank(rows) == d:
            tau = tuple(i + 1 for i in combo)
            eta = tuple(i for i in range(1, m + 1) if i not in set(tau))
            out.append(BasicPartition(tau, eta))
    return out


def basic_solution(a: Matrix, b: Sequence[Fraction], part: BasicPartition):
    """Primal basic solution A_tau^-1 b_tau for a partition, or None if singular."""
    rows = tuple(a[i - 1] for i in part.tau)
    rhs = vec(b[i - 1] for i in part.tau)
    return solve_linear_system(rows, rhs)


def maximize_exhaustive(c: Sequence, poly) -> Optional[Fraction]:
    """Self-check mode: best objective over all feasible basic solutions.

    Agrees with maximize() on bounded feasible problems whose constraint
    matrix has full column rank.  Returns None when no basic solution is
    feasible.
    """
    c = vec(c)
    best = None
    for part in enumerate_basic_partitions(poly.A):
        x = basic_solution(poly.A, poly.b, part)
        if x is None:
            continue
        if all(dot(row, x) <= rhs for row, rhs in zip(poly.A, poly.b)):
            val = dot(c, x)
            if best is None or val > best:
                best = val
    return best
