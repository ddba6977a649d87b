"""Exact rational linear programming: two-phase tableau simplex, Bland's rule.

Problems are in the form ``maximize c.x  s.t.  A x <= b,  x >= 0`` with
Fraction data.  Pivoting uses the largest reduced cost until a run of
degenerate pivots, then switches for good to Bland's rule (lowest-index
entering and leaving variables), which rules out cycling, so termination
is guaranteed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LPResult:
    status: str
    value: Optional[Fraction] = None
    x: Optional[tuple] = None
    dual: Optional[tuple] = None  # one multiplier per row of A


DEGENERATE_RUN = 25


class _Tableau:
    def __init__(self, rows, rhs, basis):
        self.rows = rows  # list of lists of Fraction
        self.rhs = rhs
        self.basis = basis

    def pivot(self, r, c):
        row = self.rows[r]
        piv = row[c]
        if piv != 1:
            self.rows[r] = row = [v / piv for v in row]
            self.rhs[r] /= piv
        for i, other in enumerate(self.rows):
            if i != r and other[c] != 0:
                f = other[c]
                self.rows[i] = [a - f * b for a, b in zip(other, row)]
                self.rhs[i] -= f * self.rhs[r]
        self.basis[r] = c

    def reduced_costs(self, cost, allowed):
        # c_j - c_B B^{-1} A_j; positive entries can improve a maximization
        out = []
        for j in range(len(cost)):
            if j not in allowed:
                out.append(Fraction(0))
                continue
            z = sum(cost[self.basis[i]] * self.rows[i][j] for i in range(len(self.rows)))
            out.append(cost[j] - z)
        return out

    def optimize(self, cost, allowed):
        red = self.reduced_costs(cost, allowed)
        order = sorted(allowed)
        bland = False
        degenerate = 0
        while True:
            improving = [j for j in order if red[j] > 0]
            if not improving:
                return OPTIMAL
            if bland:
                entering = improving[0]
            else:
                entering = max(improving, key=lambda j: red[j])
            best = None
            for i, row in enumerate(self.rows):
                a = row[entering]
                if a > 0:
                    key = (self.rhs[i] / a, self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return UNBOUNDED
            if best[0][0] == 0:
                degenerate += 1
                bland = bland or degenerate >= DEGENERATE_RUN
            else:
                degenerate = 0
            self.pivot(best[1], entering)
            row = self.rows[best[1]]
            f = red[entering]
            red = [r - f * v if j in allowed else r for j, (r, v) in enumerate(zip(red, row))]

    def value(self, cost):
        return sum(cost[b] * v for b, v in zip(self.basis, self.rhs))


def maximize(c: Sequence, A: Sequence[Sequence], b: Sequence) -> LPResult:
    """Solve ``max c.x, A x <= b, x >= 0`` exactly."""
    m, n = len(A), len(c)
    c = [Fraction(v) for v in c]
    A = [[Fraction(v) for v in row] for row in A]
    b = [Fraction(v) for v in b]
    # columns: x (n) | slacks (m) | artificials (one per negative rhs)
    neg = [i for i in range(m) if b[i] < 0]
    width = n + m + len(neg)
    rows: List[list] = []
    rhs: List[Fraction] = []
    basis: List[int] = []
    art = {}
    for i in range(m):
        row = [Fraction(0)] * width
        sign = -1 if b[i] < 0 else 1
        for j in range(n):
            row[j] = sign * A[i][j]
        row[n + i] = Fraction(sign)
        if sign < 0:
            k = n + m + len(art)
            art[i] = k
            row[k] = Fraction(1)
            basis.append(k)
        else:
            basis.append(n + i)
        rows.append(row)
        rhs.append(sign * b[i])
    tab = _Tableau(rows, rhs, basis)

    if art:
        phase1 = [Fraction(0)] * width
        for k in art.values():
            phase1[k] = Fraction(-1)
        tab.optimize(phase1, set(range(width)))
        if tab.value(phase1) < 0:
            return LPResult(INFEASIBLE)
        artificial = set(art.values())
        # drive zero-level artificials out of the basis
        for r in range(len(tab.rows)):
            if tab.basis[r] in artificial:
                col = next(
                    (j for j in range(n + m) if tab.rows[r][j] != 0),
                    None,
                )
                if col is not None:
                    tab.pivot(r, col)
        keep = [r for r in range(len(tab.rows)) if tab.basis[r] not in artificial]
        tab.rows = [tab.rows[r][: n + m] for r in keep]
        tab.rhs = [tab.rhs[r] for r in keep]
        tab.basis = [tab.basis[r] for r in keep]

    cost = c + [Fraction(0)] * m
    status = tab.optimize(cost, set(range(n + m)))
    if status == UNBOUNDED:
        return LPResult(UNBOUNDED)
    x = [Fraction(0)] * (n + m)
    for bidx, v in zip(tab.basis, tab.rhs):
        x[bidx] = v
    # dual multipliers: y_i = c_B B^{-1} e_i, read off the slack columns
    red = tab.reduced_costs(cost, set(range(n + m)))
    dual = tuple(-red[n + i] for i in range(m))
    return LPResult(OPTIMAL, tab.value(cost), tuple(x[:n]), dual)
