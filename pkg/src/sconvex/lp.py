"""Exact rational linear programming.

Two-phase primal simplex over ``fractions.Fraction`` with Bland's rule,
so termination is guaranteed and every reported solution satisfies its
constraints exactly.  Strict inequalities are never accepted: callers
rescale strict cone conditions to ">= 1" using positive homogeneity.

Besides the solution itself, outcomes carry replayable evidence for the
negative answers: Farkas multipliers on infeasibility and an improving
ray on unboundedness.  ``verify_feasible`` / ``verify_infeasibility`` /
``verify_unbounded_ray`` re-check these by plain arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from . import linalg
from .errors import ArgumentError, DimensionMismatchError, InternalInconsistencyError
from .linalg import Vec, rat, vec

LE = "<="
EQ = "=="
GE = ">="
_RELATIONS = (LE, EQ, GE)

_ZERO = Fraction(0)
_ONE = Fraction(1)

OPTIMAL = "optimal"
FEASIBLE = "feasible"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class Constraint:
    coeffs: Vec
    relation: str
    rhs: Fraction

    def __post_init__(self):
        object.__setattr__(self, "coeffs", vec(self.coeffs))
        object.__setattr__(self, "rhs", rat(self.rhs))
        if self.relation not in _RELATIONS:
            raise ArgumentError(f"unknown relation {self.relation!r}")


@dataclass(frozen=True)
class LinProgram:
    """maximize objective . x  (or pure feasibility when objective is None)

    subject to the given constraints; variables are >= 0 except those listed
    in ``free_vars`` (lower bound -inf).
    """

    num_vars: int
    constraints: tuple[Constraint, ...]
    objective: Vec | None = None
    free_vars: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "constraints", tuple(self.constraints))
        if self.num_vars < 1:
            raise ArgumentError("a program needs at least one variable")
        for c in self.constraints:
            if len(c.coeffs) != self.num_vars:
                raise DimensionMismatchError(
                    f"constraint has {len(c.coeffs)} coefficients, expected {self.num_vars}"
                )
        if self.objective is not None:
            object.__setattr__(self, "objective", vec(self.objective))
            if len(self.objective) != self.num_vars:
                raise DimensionMismatchError("objective length must match num_vars")
        object.__setattr__(self, "free_vars", frozenset(self.free_vars))
        for j in self.free_vars:
            if not 0 <= j < self.num_vars:
                raise ArgumentError(f"free variable index {j} out of range")


@dataclass(frozen=True)
class LpOutcome:
    status: str
    solution: Vec | None = None
    basis: tuple[int, ...] | None = None
    objective_value: Fraction | None = None
    ray: Vec | None = None
    infeasibility: Vec | None = None


def constraint(coeffs: Iterable, relation: str, rhs) -> Constraint:
    return Constraint(vec(coeffs), relation, rat(rhs))


# ---------------------------------------------------------------------------
# tableau machinery


class _Tableau:
    """Dense simplex tableau; rows end with the rhs column."""

    def __init__(self, program: LinProgram):
        self.program = program
        n = program.num_vars
        self.pos_col = list(range(n))
        self.neg_col: dict[int, int] = {}
        col = n
        for j in sorted(program.free_vars):
            self.neg_col[j] = col
            col += 1
        self.slack_col: dict[int, int] = {}
        self.slack_sign: dict[int, Fraction] = {}
        for i, c in enumerate(program.constraints):
            if c.relation != EQ:
                self.slack_col[i] = col
                self.slack_sign[i] = _ONE if c.relation == LE else -_ONE
                col += 1
        self.nstruct = col
        m = len(program.constraints)
        self.art_col = {i: self.nstruct + i for i in range(m)}
        self.row_sign: list[int] = []
        self.rows: list[list[Fraction]] = []
        ncols = self.nstruct + m
        for i, c in enumerate(program.constraints):
            row = [_ZERO] * (ncols + 1)
            for j, a in enumerate(c.coeffs):
                row[self.pos_col[j]] = a
                if j in self.neg_col:
                    row[self.neg_col[j]] = -a
            if i in self.slack_col:
                row[self.slack_col[i]] = self.slack_sign[i]
            row[-1] = c.rhs
            sign = 1
            if row[-1] < 0:
                sign = -1
                row = [-x for x in row]
            self.row_sign.append(sign)
            row[self.art_col[i]] = _ONE
            self.rows.append(row)
        self.ncols = ncols
        self.basis = [self.art_col[i] for i in range(m)]

    # -- pivoting ---------------------------------------------------------

    def _pivot(self, z: list[Fraction], row: int, col: int) -> None:
        rows = self.rows
        pv = rows[row][col]
        rows[row] = [x / pv for x in rows[row]]
        pivot_row = rows[row]
        for i, r in enumerate(rows):
            if i != row and r[col] != 0:
                f = r[col]
                rows[i] = [x - f * y for x, y in zip(r, pivot_row)]
        if z[col] != 0:
            f = z[col]
            for k in range(len(z)):
                z[k] -= f * pivot_row[k]
        self.basis[row] = col

    def _price_out(self, cost: list[Fraction]) -> list[Fraction]:
        z = list(cost) + [_ZERO]
        for i, b in enumerate(self.basis):
            cb = cost[b]
            if cb != 0:
                row = self.rows[i]
                for k in range(len(z)):
                    z[k] -= cb * row[k]
        return z

    def _iterate(self, z: list[Fraction], eligible: int) -> tuple[str, int | None]:
        """Bland's rule; entering columns restricted to indices < eligible."""
        while True:
            enter = next((j for j in range(eligible) if z[j] < 0), None)
            if enter is None:
                return OPTIMAL, None
            best_ratio: Fraction | None = None
            leave = None
            for i, row in enumerate(self.rows):
                a = row[enter]
                if a > 0:
                    ratio = row[-1] / a
                    if (
                        best_ratio is None
                        or ratio < best_ratio
                        or (ratio == best_ratio and self.basis[i] < self.basis[leave])
                    ):
                        best_ratio = ratio
                        leave = i
            if leave is None:
                return UNBOUNDED, enter
            self._pivot(z, leave, enter)

    # -- phase 1 ----------------------------------------------------------

    def phase1(self) -> Vec | None:
        """Drive artificials to zero; return Farkas multipliers if impossible."""
        m = len(self.rows)
        cost = [_ZERO] * self.ncols
        for i in range(m):
            cost[self.art_col[i]] = _ONE
        z = self._price_out(cost)
        status, _ = self._iterate(z, self.nstruct)
        if status != OPTIMAL:  # cost bounded below by zero
            raise InternalInconsistencyError("phase-1 simplex reported unbounded")
        if -z[-1] > 0:
            return self._farkas()
        self._expel_artificials(z)
        return None

    def _farkas(self) -> Vec:
        # y' = c_B B^{-1}; the artificial block of the tableau is B^{-1}.
        m = len(self.rows)
        y = []
        for r in range(m):
            col = self.art_col[r]
            total = _ZERO
            for i in range(len(self.rows)):
                if self.basis[i] >= self.nstruct:
                    total += self.rows[i][col]
            y.append(total)
        return tuple(s * v for s, v in zip(self.row_sign, y))

    def _expel_artificials(self, z: list[Fraction]) -> None:
        drop: list[int] = []
        for i in range(len(self.rows)):
            if self.basis[i] >= self.nstruct:
                col = next(
                    (c for c in range(self.nstruct) if self.rows[i][c] != 0), None
                )
                if col is None:
                    drop.append(i)
                else:
                    self._pivot(z, i, col)
        for i in reversed(drop):
            del self.rows[i]
            del self.basis[i]
            del self.row_sign[i]
        # artificial columns are dead from here on
        for i in range(len(self.rows)):
            self.rows[i] = self.rows[i][: self.nstruct] + [self.rows[i][-1]]
        self.ncols = self.nstruct

    # -- phase 2 ----------------------------------------------------------

    def phase2(self) -> tuple[str, int | None]:
        obj = self.program.objective
        assert obj is not None
        cost = [_ZERO] * self.ncols
        for j, cj in enumerate(obj):  # maximize c.x == minimize (-c).x
            cost[self.pos_col[j]] = -cj
            if j in self.neg_col:
                cost[self.neg_col[j]] = cj
        z = self._price_out(cost)
        return self._iterate(z, self.nstruct)

    # -- extraction -------------------------------------------------------

    def _std_values(self) -> list[Fraction]:
        values = [_ZERO] * self.ncols
        for i, b in enumerate(self.basis):
            values[b] = self.rows[i][-1]
        return values

    def solution(self) -> Vec:
        values = self._std_values()
        out = []
        for j in range(self.program.num_vars):
            x = values[self.pos_col[j]]
            if j in self.neg_col:
                x -= values[self.neg_col[j]]
            out.append(x)
        return tuple(out)

    def variable_basis(self) -> tuple[int, ...]:
        in_basis = set(self.basis)
        out = []
        for j in range(self.program.num_vars):
            if self.pos_col[j] in in_basis or self.neg_col.get(j) in in_basis:
                out.append(j)
        return tuple(out)

    def ray(self, enter: int) -> Vec:
        d = [_ZERO] * self.ncols
        d[enter] = _ONE
        for i, b in enumerate(self.basis):
            d[b] = -self.rows[i][enter]
        out = []
        for j in range(self.program.num_vars):
            x = d[self.pos_col[j]]
            if j in self.neg_col:
                x -= d[self.neg_col[j]]
            out.append(x)
        return tuple(out)


# ---------------------------------------------------------------------------
# public entry points


def solve(program: LinProgram) -> LpOutcome:
    """Exact status plus certificate: solution, Farkas multipliers, or ray."""
    t = _Tableau(program)
    farkas = t.phase1()
    if farkas is not None:
        if not verify_infeasibility(program, farkas):
            raise InternalInconsistencyError("Farkas certificate failed replay")
        return LpOutcome(status=INFEASIBLE, infeasibility=farkas)
    if program.objective is None:
        x = t.solution()
        if not verify_feasible(program, x):
            raise InternalInconsistencyError("feasible point failed replay")
        return LpOutcome(status=FEASIBLE, solution=x, basis=t.variable_basis())
    status, enter = t.phase2()
    if status == UNBOUNDED:
        assert enter is not None
        d = t.ray(enter)
        if not verify_unbounded_ray(program, d):
            raise InternalInconsistencyError("unbounded ray failed replay")
        return LpOutcome(status=UNBOUNDED, ray=d)
    x = t.solution()
    if not verify_feasible(program, x):
        raise InternalInconsistencyError("optimal point failed replay")
    value = linalg.dot(program.objective, x)
    return LpOutcome(
        status=OPTIMAL,
        solution=x,
        basis=t.variable_basis(),
        objective_value=value,
    )


def basic_solution(program: LinProgram) -> LpOutcome:
    """A basic feasible solution of {A x = b, x >= 0}.

    The support of the returned solution indexes linearly independent
    columns and never exceeds the number of equality rows.
    """
    if program.free_vars:
        raise ArgumentError("basic_solution requires all variables nonnegative")
    if any(c.relation != EQ for c in program.constraints):
        raise ArgumentError("basic_solution requires equality constraints only")
    t = _Tableau(program)
    farkas = t.phase1()
    if farkas is not None:
        return LpOutcome(status=INFEASIBLE, infeasibility=farkas)
    x = t.solution()
    if not verify_feasible(program, x):
        raise InternalInconsistencyError("basic solution failed replay")
    return LpOutcome(status=FEASIBLE, solution=x, basis=t.variable_basis())


# ---------------------------------------------------------------------------
# replay helpers (arithmetic only)


def verify_feasible(program: LinProgram, x: Sequence[Fraction]) -> bool:
    if len(x) != program.num_vars:
        return False
    for j in range(program.num_vars):
        if j not in program.free_vars and x[j] < 0:
            return False
    for c in program.constraints:
        lhs = linalg.dot(c.coeffs, x)
        if c.relation == LE and lhs > c.rhs:
            return False
        if c.relation == GE and lhs < c.rhs:
            return False
        if c.relation == EQ and lhs != c.rhs:
            return False
    return True


def verify_infeasibility(program: LinProgram, y: Sequence[Fraction]) -> bool:
    """Farkas replay: y's signed combination proves the system empty."""
    if len(y) != len(program.constraints):
        return False
    for yi, c in zip(y, program.constraints):
        if c.relation == LE and yi > 0:
            return False
        if c.relation == GE and yi < 0:
            return False
    combined = [_ZERO] * program.num_vars
    rhs_total = _ZERO
    for yi, c in zip(y, program.constraints):
        if yi == 0:
            continue
        rhs_total += yi * c.rhs
        for j, a in enumerate(c.coeffs):
            combined[j] += yi * a
    for j, cj in enumerate(combined):
        if j in program.free_vars:
            if cj != 0:
                return False
        elif cj > 0:
            return False
    return rhs_total > 0


def verify_unbounded_ray(program: LinProgram, d: Sequence[Fraction]) -> bool:
    if program.objective is None or len(d) != program.num_vars:
        return False
    for j in range(program.num_vars):
        if j not in program.free_vars and d[j] < 0:
            return False
    for c in program.constraints:
        lhs = linalg.dot(c.coeffs, d)
        if c.relation == LE and lhs > 0:
            return False
        if c.relation == GE and lhs < 0:
            return False
        if c.relation == EQ and lhs != 0:
            return False
    return linalg.dot(program.objective, d) > 0
