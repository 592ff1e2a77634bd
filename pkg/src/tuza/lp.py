"""Exact linear programming over rationals.

Two-phase tableau simplex with Bland's rule.  Every outcome carries a
certificate that can be checked without trusting the solver: a dual vector
for optimal programs, Farkas multipliers for infeasible ones and an
improving ray for unbounded ones.

Sign convention for constraint multipliers (duals and Farkas): >= rows take
nonnegative multipliers, <= rows nonpositive, = rows are free.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Optional, Union

Number = Union[int, Fraction, str]
RELATIONS = ("<=", ">=", "=")


class LpError(ValueError):
    """Malformed linear program."""


def q(x: Number) -> Fraction:
    """Exact rational from an int, Fraction or a ``"p/q"`` / decimal string."""
    return x if isinstance(x, Fraction) else Fraction(x)


def fmt(x: Fraction) -> str:
    return str(x)


@dataclass
class Constraint:
    coeffs: dict[str, Fraction]
    relation: str
    rhs: Fraction
    label: str = ""

    def __post_init__(self):
        if self.relation not in RELATIONS:
            raise LpError(f"unknown relation {self.relation!r}")
        self.coeffs = {v: q(c) for v, c in self.coeffs.items()}
        self.rhs = q(self.rhs)

    def lhs(self, point: Mapping[str, Fraction]) -> Fraction:
        return sum((c * point[v] for v, c in self.coeffs.items()), Fraction(0))


@dataclass
class LinearProgram:
    """Minimize ``objective`` subject to ``constraints``.

    Variables missing from ``lower_bounds`` are free.
    """

    variables: list[str]
    objective: dict[str, Fraction]
    constraints: list[Constraint] = field(default_factory=list)
    lower_bounds: dict[str, Fraction] = field(default_factory=dict)

    def add(self, coeffs: Mapping[str, Number], relation: str, rhs: Number, label: str = "") -> int:
        self.constraints.append(Constraint(dict(coeffs), relation, q(rhs), label))
        return len(self.constraints) - 1

    def check_well_formed(self) -> None:
        declared = set(self.variables)
        if len(declared) != len(self.variables):
            raise LpError("duplicate variable names")
        if not self.objective:
            raise LpError("empty objective")
        for v in self.objective:
            if v not in declared:
                raise LpError(f"objective uses undeclared variable {v!r}")
        for v in self.lower_bounds:
            if v not in declared:
                raise LpError(f"bound on undeclared variable {v!r}")
        for i, c in enumerate(self.constraints):
            for v in c.coeffs:
                if v not in declared:
                    raise LpError(f"constraint {i} ({c.label}) uses undeclared variable {v!r}")

    def objective_value(self, point: Mapping[str, Fraction]) -> Fraction:
        return sum((q(c) * point[v] for v, c in self.objective.items()), Fraction(0))


@dataclass
class LpOutcome:
    status: str                                   # optimal | infeasible | unbounded
    value: Optional[Fraction] = None
    solution: dict[str, Fraction] = field(default_factory=dict)
    binding: list[int] = field(default_factory=list)
    duals: list[Fraction] = field(default_factory=list)
    farkas: list[Fraction] = field(default_factory=list)
    ray: dict[str, Fraction] = field(default_factory=dict)
    pivots: int = 0


# -- slack reporting -------------------------------------------------------

@dataclass(frozen=True)
class SlackEntry:
    index: int
    label: str
    lhs: Fraction
    relation: str
    rhs: Fraction
    slack: Fraction      # >= 0 iff satisfied; equality rows report -|lhs - rhs|

    @property
    def satisfied(self) -> bool:
        return self.slack >= 0

    @property
    def binding(self) -> bool:
        return self.slack == 0


def constraint_slack(c: Constraint, lhs: Fraction) -> Fraction:
    if c.relation == ">=":
        return lhs - c.rhs
    if c.relation == "<=":
        return c.rhs - lhs
    return -abs(lhs - c.rhs)


def check_solution(lp: LinearProgram, sol: Mapping[str, Number]) -> list[SlackEntry]:
    missing = [v for v in lp.variables if v not in sol]
    if missing:
        raise LpError(f"solution does not assign {missing}")
    point = {v: q(x) for v, x in sol.items()}
    out = []
    for i, c in enumerate(lp.constraints):
        lhs = c.lhs(point)
        out.append(SlackEntry(i, c.label, lhs, c.relation, c.rhs, constraint_slack(c, lhs)))
    return out


def bound_violations(lp: LinearProgram, sol: Mapping[str, Number]) -> list[str]:
    return [v for v, lb in lp.lower_bounds.items() if q(sol[v]) < lb]


def is_feasible(lp: LinearProgram, sol: Mapping[str, Number]) -> bool:
    return (all(e.satisfied for e in check_solution(lp, sol))
            and not bound_violations(lp, sol))


# -- certificate checks (independent of the simplex internals) -------------

def _multiplier_signs_ok(lp: LinearProgram, mult: list[Fraction]) -> bool:
    if len(mult) != len(lp.constraints):
        return False
    for c, y in zip(lp.constraints, mult):
        if c.relation == ">=" and y < 0:
            return False
        if c.relation == "<=" and y > 0:
            return False
    return True


def _combined_row(lp: LinearProgram, mult: list[Fraction]) -> dict[str, Fraction]:
    row = {v: Fraction(0) for v in lp.variables}
    for c, y in zip(lp.constraints, mult):
        for v, a in c.coeffs.items():
            row[v] += y * a
    return row


def dual_value(lp: LinearProgram, duals: list[Fraction]) -> Optional[Fraction]:
    """Lower bound on the optimum certified by ``duals``, or None if not dual feasible."""
    if not _multiplier_signs_ok(lp, duals):
        return None
    row = _combined_row(lp, duals)
    value = sum((y * c.rhs for c, y in zip(lp.constraints, duals)), Fraction(0))
    for v in lp.variables:
        reduced = q(lp.objective.get(v, 0)) - row[v]
        if v in lp.lower_bounds:
            if reduced < 0:
                return None
            value += reduced * lp.lower_bounds[v]
        elif reduced != 0:
            return None
    return value


def verify_optimal(lp: LinearProgram, out: LpOutcome) -> bool:
    """Primal feasible, objective matches, and the dual certifies the same value."""
    if out.status != "optimal" or not is_feasible(lp, out.solution):
        return False
    if lp.objective_value(out.solution) != out.value:
        return False
    return dual_value(lp, out.duals) == out.value


def verify_infeasible(lp: LinearProgram, farkas: list[Fraction]) -> bool:
    """Multipliers combine the rows into ``g.x >= beta`` with ``max g.x < beta``."""
    if not _multiplier_signs_ok(lp, farkas):
        return False
    g = _combined_row(lp, farkas)
    beta = sum((y * c.rhs for c, y in zip(lp.constraints, farkas)), Fraction(0))
    sup = Fraction(0)
    for v in lp.variables:
        if v in lp.lower_bounds:
            if g[v] > 0:
                return False
            sup += g[v] * lp.lower_bounds[v]
        elif g[v] != 0:
            return False
    return sup < beta


def verify_unbounded(lp: LinearProgram, out: LpOutcome) -> bool:
    """A feasible point plus a recession direction that strictly improves."""
    if out.status != "unbounded" or not is_feasible(lp, out.solution):
        return False
    d = {v: q(out.ray.get(v, 0)) for v in lp.variables}
    if any(d[v] < 0 for v in lp.lower_bounds):
        return False
    for c in lp.constraints:
        ad = c.lhs(d)
        if (c.relation == ">=" and ad < 0) or (c.relation == "<=" and ad > 0) \
                or (c.relation == "=" and ad != 0):
            return False
    return lp.objective_value(d) < 0


# -- simplex ---------------------------------------------------------------

class _Tableau:
    """Rows ``B^-1 A | B^-1 b`` plus the running ``B^-1`` for dual recovery."""

    def __init__(self, rows, rhs, basis, n_cols):
        m = len(rows)
        self.rows = rows
        self.rhs = rhs
        self.basis = basis
        self.n_cols = n_cols
        self.inv = [[Fraction(int(i == j)) for j in range(m)] for i in range(m)]
        self.pivots = 0

    def pivot(self, r: int, col: int) -> None:
        p = self.rows[r][col]
        self.rows[r] = [a / p for a in self.rows[r]]
        self.inv[r] = [a / p for a in self.inv[r]]
        self.rhs[r] /= p
        for i in range(len(self.rows)):
            f = self.rows[i][col]
            if i == r or f == 0:
                continue
            self.rows[i] = [a - f * b for a, b in zip(self.rows[i], self.rows[r])]
            self.inv[i] = [a - f * b for a, b in zip(self.inv[i], self.inv[r])]
            self.rhs[i] -= f * self.rhs[r]
        self.basis[r] = col
        self.pivots += 1

    def duals(self, cost: list[Fraction]) -> list[Fraction]:
        m = len(self.rows)
        cb = [cost[b] for b in self.basis]
        return [sum((cb[i] * self.inv[i][j] for i in range(m)), Fraction(0)) for j in range(m)]

    def reduced(self, cost: list[Fraction], j: int) -> Fraction:
        return cost[j] - sum((cost[b] * row[j] for b, row in zip(self.basis, self.rows)), Fraction(0))

    def run(self, cost: list[Fraction], allowed: int) -> Optional[int]:
        """Bland's rule on columns ``< allowed``; returns an unbounded column or None."""
        while True:
            entering = next((j for j in range(allowed) if self.reduced(cost, j) < 0), None)
            if entering is None:
                return None
            best = None
            for i, row in enumerate(self.rows):
                if row[entering] > 0:
                    key = (self.rhs[i] / row[entering], self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return entering
            self.pivot(best[1], entering)


def solve(lp: LinearProgram) -> LpOutcome:
    lp.check_well_formed()
    cons = lp.constraints
    m = len(cons)

    # structural columns: x - lb for bounded vars, x+ and x- for free vars
    columns: list[tuple[str, int]] = []
    for v in lp.variables:
        columns.append((v, 1))
        if v not in lp.lower_bounds:
            columns.append((v, -1))
    n_struct = len(columns)
    slack_col = {}
    for i, c in enumerate(cons):
        if c.relation != "=":
            slack_col[i] = n_struct + len(slack_col)
    n_real = n_struct + len(slack_col)

    sign, rows, rhs = [], [], []
    for i, c in enumerate(cons):
        row = [q(c.coeffs.get(v, 0)) * s for v, s in columns] + [Fraction(0)] * len(slack_col)
        if i in slack_col:
            row[slack_col[i]] = Fraction(1 if c.relation == "<=" else -1)
        b = c.rhs - sum((q(a) * lp.lower_bounds.get(v, 0) for v, a in c.coeffs.items()), Fraction(0))
        s = -1 if b < 0 else 1
        sign.append(s)
        rows.append([a * s for a in row])
        rhs.append(b * s)

    basis, art_rows = [], []
    for i in range(m):
        if i in slack_col and rows[i][slack_col[i]] == 1:
            basis.append(slack_col[i])
        else:
            basis.append(n_real + len(art_rows))
            art_rows.append(i)
    n_cols = n_real + len(art_rows)
    for i in range(m):
        rows[i] += [Fraction(0)] * len(art_rows)
    for a, i in enumerate(art_rows):
        rows[i][n_real + a] = Fraction(1)
    tab = _Tableau(rows, rhs, basis, n_cols)

    # phase 1
    cost1 = [Fraction(0)] * n_real + [Fraction(1)] * len(art_rows)
    tab.run(cost1, n_cols)
    infeasibility = sum((tab.rhs[i] for i, b in enumerate(tab.basis) if b >= n_real), Fraction(0))
    if infeasibility > 0:
        y = tab.duals(cost1)
        return LpOutcome("infeasible", farkas=[s * yi for s, yi in zip(sign, y)], pivots=tab.pivots)
    for i, b in enumerate(tab.basis):
        if b >= n_real:
            col = next((j for j in range(n_real) if tab.rows[i][j] != 0), None)
            if col is not None:
                tab.pivot(i, col)

    # phase 2; artificial columns never re-enter
    cost2 = [Fraction(0)] * n_cols
    for j, (v, s) in enumerate(columns):
        cost2[j] = q(lp.objective.get(v, 0)) * s
    unbounded_col = tab.run(cost2, n_real)

    std = [Fraction(0)] * n_cols
    for i, b in enumerate(tab.basis):
        std[b] = tab.rhs[i]

    def to_original(vec) -> dict[str, Fraction]:
        out = {v: Fraction(0) for v in lp.variables}
        for j, (v, s) in enumerate(columns):
            out[v] += s * vec[j]
        return out

    point = to_original(std)
    for v, lb in lp.lower_bounds.items():
        point[v] += q(lb)

    if unbounded_col is not None:
        d = [Fraction(0)] * n_cols
        d[unbounded_col] = Fraction(1)
        for i, b in enumerate(tab.basis):
            d[b] = -tab.rows[i][unbounded_col]
        return LpOutcome("unbounded", solution=point, ray=to_original(d), pivots=tab.pivots)

    y = tab.duals(cost2)
    duals = [s * yi for s, yi in zip(sign, y)]
    value = lp.objective_value(point)
    binding = [e.index for e in check_solution(lp, point) if e.binding]
    return LpOutcome("optimal", value, point, binding, duals, pivots=tab.pivots)


# -- serialization ---------------------------------------------------------

def program_to_dict(lp: LinearProgram) -> dict:
    return {
        "variables": list(lp.variables),
        "objective": {v: fmt(q(c)) for v, c in lp.objective.items()},
        "lower_bounds": {v: fmt(q(b)) for v, b in lp.lower_bounds.items()},
        "constraints": [
            {"label": c.label, "coeffs": {v: fmt(a) for v, a in c.coeffs.items()},
             "relation": c.relation, "rhs": fmt(c.rhs)}
            for c in lp.constraints
        ],
    }


def program_from_dict(d: dict) -> LinearProgram:
    lp = LinearProgram(list(d["variables"]), {v: q(c) for v, c in d["objective"].items()},
                       lower_bounds={v: q(b) for v, b in d.get("lower_bounds", {}).items()})
    for c in d.get("constraints", []):
        lp.add(c["coeffs"], c["relation"], c["rhs"], c.get("label", ""))
    return lp


def outcome_to_dict(out: LpOutcome) -> dict:
    d: dict = {"status": out.status}
    if out.value is not None:
        d["value"] = fmt(out.value)
    if out.solution:
        d["solution"] = {v: fmt(x) for v, x in out.solution.items()}
    if out.status == "optimal":
        d["binding"] = list(out.binding)
        d["duals"] = [fmt(y) for y in out.duals]
    if out.farkas:
        d["farkas"] = [fmt(y) for y in out.farkas]
    if out.ray:
        d["ray"] = {v: fmt(x) for v, x in out.ray.items()}
    return d


def dumps(obj: Union[LinearProgram, LpOutcome]) -> str:
    d = program_to_dict(obj) if isinstance(obj, LinearProgram) else outcome_to_dict(obj)
    return json.dumps(d, indent=2)
