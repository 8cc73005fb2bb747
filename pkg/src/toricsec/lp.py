"""Exact two-phase simplex method over the rationals.

Problems are taken in the form::

    maximize    c . x
    subject to  A_ub x <= b_ub
                A_eq x == b_eq
                x >= 0

Pivoting follows Bland's rule (smallest eligible index enters, ties in the
ratio test broken by smallest basic index), so the method terminates on
degenerate problems without any tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LPResult:
    status: str
    x: tuple[Fraction, ...] | None = None
    value: Fraction | None = None
    # On OPTIMAL: dual values y (y >= 0 on the A_ub rows).
    # On INFEASIBLE: a Farkas vector y with y >= 0 on the A_ub rows,
    # y^T A >= 0 and y^T b < 0.
    dual: tuple[Fraction, ...] | None = None


class _Tableau:
    """Dense tableau; ``ident[k]`` is the column that started as e_k, so the
    columns ``ident`` of the current tableau hold B^-1."""

    def __init__(self, rows: list[list[Fraction]], rhs: list[Fraction], ident: list[int]):
        self.m = len(rows)
        self.t = [row + [b] for row, b in zip(rows, rhs)]
        self.ident = ident
        self.basis = list(ident)

    def pivot(self, r: int, c: int) -> None:
        t = self.t
        inv = 1 / t[r][c]
        pr = [x * inv for x in t[r]]
        t[r] = pr
        nz = [j for j, x in enumerate(pr) if x != 0]
        for i in range(self.m):
            if i != r:
                row = t[i]
                f = row[c]
                if f != 0:
                    for j in nz:
                        row[j] -= f * pr[j]
        self.basis[r] = c

    def duals(self, cost: Sequence[Fraction]) -> list[Fraction]:
        y = [Fraction(0)] * self.m
        for i, b in enumerate(self.basis):
            cb = cost[b]
            if cb != 0:
                row = self.t[i]
                for k in range(self.m):
                    y[k] += cb * row[self.ident[k]]
        return y

    def run(self, cost: Sequence[Fraction], allowed: int) -> bool:
        """Maximize ``cost``; columns ``>= allowed`` may not enter.

        Returns False if the objective is unbounded.
        """
        while True:
            z = [Fraction(0)] * allowed
            for i, b in enumerate(self.basis):
                cb = cost[b]
                if cb != 0:
                    row = self.t[i]
                    for j in range(allowed):
                        if row[j] != 0:
                            z[j] += cb * row[j]
            basic = set(self.basis)
            entering = next(
                (j for j in range(allowed) if j not in basic and cost[j] - z[j] > 0), None
            )
            if entering is None:
                return True
            best = None
            for i in range(self.m):
                a = self.t[i][entering]
                if a > 0:
                    key = (self.t[i][-1] / a, self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return False
            self.pivot(best[1], entering)


def linprog(
    c: Sequence,
    A_ub: Sequence[Sequence] = (),
    b_ub: Sequence = (),
    A_eq: Sequence[Sequence] = (),
    b_eq: Sequence = (),
) -> LPResult:
    """Maximize ``c . x`` over the polyhedron described above."""
    nvar = len(c)
    n_ub = len(A_ub)
    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    signs: list[int] = []
    for i, (row, b) in enumerate(zip(A_ub, b_ub)):
        slack = [Fraction(0)] * n_ub
        slack[i] = Fraction(1)
        rows.append([Fraction(x) for x in row] + slack)
        rhs.append(Fraction(b))
    for row, b in zip(A_eq, b_eq):
        rows.append([Fraction(x) for x in row] + [Fraction(0)] * n_ub)
        rhs.append(Fraction(b))
    ncols = nvar + n_ub
    if not rows:
        if any(Fraction(x) > 0 for x in c):
            return LPResult(UNBOUNDED)
        return LPResult(OPTIMAL, tuple(Fraction(0) for _ in c), Fraction(0), ())
    for i in range(len(rows)):
        if rhs[i] < 0:
            rows[i] = [-x for x in rows[i]]
            rhs[i] = -rhs[i]
            signs.append(-1)
        else:
            signs.append(1)

    # Slack columns start basic where the row was not negated; every other
    # row gets an artificial column.
    m = len(rows)
    need_art = [i for i in range(m) if not (i < n_ub and signs[i] == 1)]
    nart = len(need_art)
    ident = []
    art_of = {}
    for k, i in enumerate(need_art):
        art_of[i] = ncols + k
    for i in range(m):
        extra = [Fraction(0)] * nart
        if i in art_of:
            extra[art_of[i] - ncols] = Fraction(1)
            ident.append(art_of[i])
        else:
            ident.append(nvar + i)
        rows[i] = rows[i] + extra
    tab = _Tableau(rows, rhs, ident)
    art0 = ncols

    if nart:
        # Phase 1: maximize -(sum of artificials).
        phase1 = [Fraction(0)] * ncols + [Fraction(-1)] * nart
        tab.run(phase1, ncols)
        infeas = sum((tab.t[i][-1] for i, b in enumerate(tab.basis) if b >= art0), Fraction(0))
        if infeas > 0:
            y = tab.duals(phase1)
            # y^T M >= 0 on real columns and y^T r < 0; undo the row sign flips.
            return LPResult(INFEASIBLE, dual=tuple(yk * s for yk, s in zip(y, signs)))

        # Drive zero-level artificials out of the basis where possible.
        for i in range(m):
            if tab.basis[i] >= art0:
                basic = set(tab.basis)
                col = next((j for j in range(ncols) if tab.t[i][j] != 0 and j not in basic), None)
                if col is not None:
                    tab.pivot(i, col)

    phase2 = [Fraction(x) for x in c] + [Fraction(0)] * (n_ub + nart)
    if not tab.run(phase2, ncols):
        return LPResult(UNBOUNDED)
    x = [Fraction(0)] * ncols
    for i, b in enumerate(tab.basis):
        if b < ncols:
            x[b] = tab.t[i][-1]
    value = sum((Fraction(ci) * xi for ci, xi in zip(c, x)), Fraction(0))
    y = tab.duals(phase2)
    dual = tuple(yk * s for yk, s in zip(y, signs))
    return LPResult(OPTIMAL, tuple(x[:nvar]), value, dual)
