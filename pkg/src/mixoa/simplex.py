"""Two-phase tableau simplex over exact rationals, Bland's rule throughout."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

Matrix = Sequence[Sequence[Fraction | int]]


class LPError(RuntimeError):
    pass


@dataclass(frozen=True)
class LPResult:
    status: str  # "optimal", "infeasible" or "unbounded"
    x: tuple[Fraction, ...] | None
    objective: Fraction | None


def _pivot(T: list[list[Fraction]], basis: list[int], r: int, c: int):
    piv = T[r][c]
    T[r] = [v / piv for v in T[r]]
    for i, row in enumerate(T):
        if i != r and row[c] != 0:
            f = row[c]
            T[i] = [a - f * b for a, b in zip(row, T[r])]
    basis[r] = c


def _run(T: list[list[Fraction]], basis: list[int], allowed: int) -> str:
    """Minimise the objective in the last row; columns >= ``allowed`` never enter."""
    while True:
        obj = T[-1]
        enter = next((j for j in range(allowed) if obj[j] < 0), None)
        if enter is None:
            return "optimal"
        best = None
        for i in range(len(T) - 1):
            a = T[i][enter]
            if a > 0:
                key = (T[i][-1] / a, basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:
            return "unbounded"
        _pivot(T, basis, best[1], enter)


def linprog_exact(c: Sequence, A_ub: Matrix = (), b_ub: Sequence = (),
                  A_eq: Matrix = (), b_eq: Sequence = ()) -> LPResult:
    """Minimise c.x subject to A_ub x <= b_ub, A_eq x = b_eq, x >= 0."""
    nvar = len(c)
    rows: list[tuple[list[Fraction], Fraction, int]] = []  # coefficients, rhs, slack sign
    for a, b in zip(A_ub, b_ub):
        rows.append(([Fraction(v) for v in a], Fraction(b), 1))
    for a, b in zip(A_eq, b_eq):
        rows.append(([Fraction(v) for v in a], Fraction(b), 0))
    if any(len(a) != nvar for a, _, _ in rows):
        raise ValueError("constraint rows must have len(c) entries")
    slack_rows = [i for i, (_, _, s) in enumerate(rows) if s]
    nslack = len(slack_rows)
    nrow = len(rows)
    width = nvar + nslack + nrow + 1  # structural, slack, artificial, rhs

    T: list[list[Fraction]] = []
    for i, (a, b, s) in enumerate(rows):
        line = a + [Fraction(0)] * (nslack + nrow) + [b]
        if s:
            line[nvar + slack_rows.index(i)] = Fraction(1)
        if b < 0:
            line = [-v for v in line]
        line[nvar + nslack + i] = Fraction(1)
        T.append(line)
    basis = [nvar + nslack + i for i in range(nrow)]

    # phase 1: minimise the sum of artificials
    phase1 = [Fraction(0)] * width
    for line in T:
        phase1 = [p - v for p, v in zip(phase1, line)]
    for i in range(nrow):
        phase1[nvar + nslack + i] = Fraction(0)
    T.append(phase1)
    _run(T, basis, nvar + nslack)
    if T[-1][-1] != 0:
        return LPResult("infeasible", None, None)
    # drive remaining (zero-valued) artificials out of the basis
    for i in range(nrow):
        if basis[i] >= nvar + nslack:
            col = next((j for j in range(nvar + nslack) if T[i][j] != 0), None)
            if col is not None:
                _pivot(T, basis, i, col)
    T.pop()

    # phase 2
    cost = [Fraction(v) for v in c] + [Fraction(0)] * (nslack + nrow + 1)
    for i, bv in enumerate(basis):
        if cost[bv] != 0:
            f = cost[bv]
            cost = [a - f * b for a, b in zip(cost, T[i])]
    T.append(cost)
    status = _run(T, basis, nvar + nslack)
    if status == "unbounded":
        return LPResult("unbounded", None, None)
    x = [Fraction(0)] * nvar
    for i, bv in enumerate(basis):
        if bv < nvar:
            x[bv] = T[i][-1]
    objective = sum((Fraction(ci) * xi for ci, xi in zip(c, x)), Fraction(0))
    return LPResult("optimal", tuple(x), objective)
