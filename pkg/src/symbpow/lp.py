"""Exact linear programming: two-phase primal simplex over Fractions.

minimize c.x  subject to  A x (<= | >= | ==) b,  x >= 0.

Bland's anti-cycling rule (lowest eligible index enters, lowest-index basic
among minimum-ratio ties leaves) guarantees termination, and every returned
solution is re-checked by substitution into the original constraints before
it leaves this module.  Everything is a Fraction; no floats anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"

LE, GE, EQ = "<=", ">=", "=="


@dataclass(frozen=True)
class LinearProgram:
    matrix: tuple[tuple[Fraction, ...], ...]
    rhs: tuple[Fraction, ...]
    senses: tuple[str, ...]
    objective: tuple[Fraction, ...]

    @staticmethod
    def make(matrix, rhs, senses, objective) -> "LinearProgram":
        mat = tuple(tuple(Fraction(x) for x in row) for row in matrix)
        b = tuple(Fraction(x) for x in rhs)
        c = tuple(Fraction(x) for x in objective)
        senses = tuple(senses)
        if len(mat) != len(b) or len(mat) != len(senses):
            raise ValueError("inconsistent row counts")
        if any(len(row) != len(c) for row in mat):
            raise ValueError("inconsistent column counts")
        if any(s not in (LE, GE, EQ) for s in senses):
            raise ValueError("bad sense")
        return LinearProgram(mat, b, senses, c)


@dataclass(frozen=True)
class LPResult:
    status: str
    value: Fraction | None
    solution: tuple[Fraction, ...] | None


class _Tableau:
    def __init__(self, lp: LinearProgram):
        nstruct = len(lp.objective)
        rows = []
        senses = []
        for arow, bval, sense in zip(lp.matrix, lp.rhs, lp.senses):
            if bval < 0:
                arow = tuple(-x for x in arow)
                bval = -bval
                sense = {LE: GE, GE: LE, EQ: EQ}[sense]
            rows.append(list(arow))
            rows[-1].append(bval)
            senses.append(sense)

        m = len(rows)
        slack_cols = sum(1 for s in senses if s in (LE, GE))
        total = nstruct + slack_cols + m  # worst case: artificial per row
        self.nstruct = nstruct
        self.rows: list[list[Fraction]] = []
        self.basis: list[int] = []
        self.artificials: list[int] = []
        next_slack = nstruct
        next_art = nstruct + slack_cols
        for row, sense in zip(rows, senses):
            body = row[:-1] + [Fraction(0)] * (total - nstruct) + [row[-1]]
            if sense == LE:
                body[next_slack] = Fraction(1)
                self.basis.append(next_slack)
                next_slack += 1
            elif sense == GE:
                body[next_slack] = Fraction(-1)
                next_slack += 1
                body[next_art] = Fraction(1)
                self.basis.append(next_art)
                self.artificials.append(next_art)
                next_art += 1
            else:
                body[next_art] = Fraction(1)
                self.basis.append(next_art)
                self.artificials.append(next_art)
                next_art += 1
            self.rows.append(body)
        self.ncols = total  # columns before the rhs
        self.art_set = set(self.artificials)

    def _pivot(self, r: int, c: int):
        piv = self.rows[r][c]
        self.rows[r] = [x / piv for x in self.rows[r]]
        prow = self.rows[r]
        for i in range(len(self.rows)):
            if i != r and self.rows[i][c] != 0:
                f = self.rows[i][c]
                self.rows[i] = [a - f * b for a, b in zip(self.rows[i], prow)]
        self.basis[r] = c

    def _reduced_costs(self, cost: list[Fraction]):
        """cost vector over all columns -> reduced cost row and objective."""
        z = [Fraction(0)] * (self.ncols + 1)
        for r, b in enumerate(self.basis):
            cb = cost[b]
            if cb:
                for j in range(self.ncols + 1):
                    z[j] += cb * self.rows[r][j]
        red = [cost[j] - z[j] for j in range(self.ncols)]
        return red, z[self.ncols]

    def _iterate(self, cost: list[Fraction], allowed) -> str:
        while True:
            red, _ = self._reduced_costs(cost)
            enter = next((j for j in range(self.ncols)
                          if j in allowed and red[j] < 0), None)
            if enter is None:
                return OPTIMAL
            ratio = None
            leave = None
            for i, row in enumerate(self.rows):
                a = row[enter]
                if a > 0:
                    r = row[self.ncols] / a
                    if ratio is None or r < ratio or (r == ratio and self.basis[i] < self.basis[leave]):
                        ratio = r
                        leave = i
            if leave is None:
                return UNBOUNDED
            self._pivot(leave, enter)

    def solve(self, objective: Sequence[Fraction]) -> LPResult:
        all_cols = set(range(self.ncols))
        if self.artificials:
            phase1 = [Fraction(0)] * self.ncols
            for a in self.artificials:
                phase1[a] = Fraction(1)
            status = self._iterate(phase1, all_cols)
            assert status == OPTIMAL  # phase 1 is bounded below by 0
            _, value = self._reduced_costs(phase1)
            if value != 0:
                return LPResult(INFEASIBLE, None, None)
            self._purge_artificials()
        non_art = all_cols - self.art_set
        cost = [Fraction(0)] * self.ncols
        for j, cj in enumerate(objective):
            cost[j] = Fraction(cj)
        status = self._iterate(cost, non_art)
        if status == UNBOUNDED:
            return LPResult(UNBOUNDED, None, None)
        _, value = self._reduced_costs(cost)
        x = [Fraction(0)] * self.nstruct
        for r, b in enumerate(self.basis):
            if b < self.nstruct:
                x[b] = self.rows[r][self.ncols]
        return LPResult(OPTIMAL, value, tuple(x))

    def _purge_artificials(self):
        """Pivot every artificial out of the basis (or drop its redundant
        row) so phase 2 can ignore artificial columns entirely."""
        for r in range(len(self.rows) - 1, -1, -1):
            b = self.basis[r]
            if b not in self.art_set:
                continue
            col = next((j for j in range(self.ncols)
                        if j not in self.art_set and self.rows[r][j] != 0), None)
            if col is None:
                del self.rows[r]
                del self.basis[r]
            else:
                self._pivot(r, col)


def _verify(lp: LinearProgram, result: LPResult):
    x = result.solution
    assert x is not None and all(v >= 0 for v in x)
    for row, bval, sense in zip(lp.matrix, lp.rhs, lp.senses):
        lhs = sum(a * v for a, v in zip(row, x))
        ok = lhs <= bval if sense == LE else lhs >= bval if sense == GE else lhs == bval
        assert ok, f"solution violates {row} {sense} {bval}: got {lhs}"
    val = sum(c * v for c, v in zip(lp.objective, x))
    assert val == result.value, "objective mismatch"


def solve(lp: LinearProgram) -> LPResult:
    """Solve, with the solution substituted back into every constraint
    before being returned."""
    result = _Tableau(lp).solve(lp.objective)
    if result.status == OPTIMAL:
        _verify(lp, result)
    return result


def feasible_point(matrix, rhs, senses) -> tuple[Fraction, ...] | None:
    """A basic feasible point of the system, or None (phase 1 only)."""
    lp = LinearProgram.make(matrix, rhs, senses, [Fraction(0)] * len(matrix[0]))
    result = solve(lp)
    return result.solution if result.status == OPTIMAL else None
