"""Weight-function certificates for upper bounds on the Tuza constant.

A scheme assigns weight w1, w2, w3 to vertices of degree 1, 2, 3, w4 to
vertices of degree >= 4 and wm to every edge.  If ``C * tau(H) <= w(H)`` for
every k-uniform H then ``c_k <= max(weights) / C``.  The inductive argument
that establishes this reduces to a finite list of linear inequalities in the
weights, one per case of the induction; this module generates them, checks
schemes against them exactly and optimizes schemes with the rational LP.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

import numpy as np

from . import lp as rlp
from .constructions import random_uniform_hypergraph
from .hypergraph import Hypergraph, degree_profile, dumps as dump_hypergraph
from .transversal import tau_exact

WEIGHTS = ("w1", "w2", "w3", "w4", "wm")

CAVEAT = ("These constraints transcribe the case analysis of the induction as "
          "stated; passing them certifies its arithmetic, not the completeness "
          "of the case split.")


@dataclass(frozen=True)
class WeightScheme:
    w1: Fraction
    w2: Fraction
    w3: Fraction
    w4: Fraction
    wm: Fraction
    C: Fraction
    k: int
    name: str = ""
    # granularity of printed weights, when they were copied from a table
    precision: Optional[Fraction] = None

    @classmethod
    def of(cls, weights, C, k, name="", precision=None) -> "WeightScheme":
        w = [rlp.q(x) for x in weights]
        return cls(*w, C=rlp.q(C), k=k, name=name,
                   precision=None if precision is None else rlp.q(precision))

    def as_dict(self) -> dict[str, Fraction]:
        return dict(zip(WEIGHTS, (self.w1, self.w2, self.w3, self.w4, self.wm)))

    @property
    def max_weight(self) -> Fraction:
        return max(self.as_dict().values())

    @property
    def implied_bound(self) -> Fraction:
        return self.max_weight / self.C

    def scaled(self, alpha) -> "WeightScheme":
        a = rlp.q(alpha)
        return WeightScheme(*(a * w for w in self.as_dict().values()), C=a * self.C,
                            k=self.k, name=self.name)

    def invariant_violations(self) -> list[str]:
        out = []
        if self.C <= 0:
            out.append("C > 0")
        if self.w1 < 0:
            out.append("w1 >= 0")
        for lo, hi in (("w1", "w2"), ("w2", "w3"), ("w3", "w4")):
            if getattr(self, lo) > getattr(self, hi):
                out.append(f"{lo} <= {hi}")
        if self.w4 - self.w3 > self.w3 - self.w2:
            out.append("w4 - w3 <= w3 - w2")
        if self.w3 - self.w2 > self.w2 - self.w1:
            out.append("w3 - w2 <= w2 - w1")
        return out


LEMMA7 = WeightScheme.of((11093, 17131, 18250, 18400, 18400), 96050, 7, name="lemma7")

_TABLE2_ROWS = {
    7: ("11.5493", "17.8354", "19.0006", "19.1555", "19.1555"),
    8: ("10.2854", "16.0254", "17.3256", "17.7171", "17.7171"),
}
_TABLE2_ROWS.update({k: ("9.5976", "14.8298", "16.1586", "16.6667", "16.6667")
                     for k in range(9, 18)})
TABLE2_BOUNDS = {7: "0.1916", 8: "0.1772", **{k: "0.1667" for k in range(9, 18)}}


def table2_scheme(k: int) -> WeightScheme:
    if k not in _TABLE2_ROWS:
        raise KeyError(f"no printed weight row for k={k} (available: 7..17)")
    return WeightScheme.of(_TABLE2_ROWS[k], 100, k, name=f"table2:{k}",
                           precision=Fraction(1, 10000))


# decrements printed in the proof for k=7 under the lemma7 weights
PRINTED_K7 = {
    "case-ii-single": 96569,
    "case-ii-regular": 192169,
    "case-iii-single": 96511,
    "case-iii-regular": 192103,
    "case-iv-overlap": 131442,
    "case-iv-linear": 192108,
}


@dataclass(frozen=True)
class CaseConstraint:
    label: str                      # constraint family
    name: str                       # unique within a system
    coeffs: dict[str, int]
    rhs_multiple: int               # right-hand side is rhs_multiple * C
    relation: str = ">="

    def lhs(self, s: WeightScheme) -> Fraction:
        w = s.as_dict()
        return sum((c * w[v] for v, c in self.coeffs.items()), Fraction(0))

    def rhs(self, C: Fraction) -> Fraction:
        return self.rhs_multiple * C


def _combine(*terms: tuple[int, dict[str, int]]) -> dict[str, int]:
    out: dict[str, int] = {}
    for factor, form in terms:
        for v, c in form.items():
            out[v] = out.get(v, 0) + factor * c
    return {v: c for v, c in out.items() if c}


def _diff(hi: str, lo: str) -> dict[str, int]:
    return {hi: 1, lo: -1}


def generate_constraints(k: int) -> list[CaseConstraint]:
    """The linear system behind the induction, for uniformity ``k``.

    Right-hand sides are expressed as multiples of C so one system serves
    every normalization.
    """
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    w = {v: {v: 1} for v in WEIGHTS}
    d43, d32, d21 = _diff("w4", "w3"), _diff("w3", "w2"), _diff("w2", "w1")
    cases = [
        ("case-i", _combine((1, w["w4"]), (5, w["wm"])), 1),
        ("case-ii-single", _combine((1, w["w4"]), (4, w["wm"]), (4 * (k - 1) - 1, d43), (1, d32)), 1),
        ("case-ii-regular", _combine((2, w["w4"]), (8, w["wm"]), (8 * (k - 1) - 1, d43), (1, d32)), 2),
        ("case-iii-single", _combine((1, w["w3"]), (3, w["wm"]), (3 * (k - 1) - 1, d32), (1, d21)), 1),
        ("case-iii-regular", _combine((2, w["w3"]), (6, w["wm"]), (6 * (k - 1) - 1, d32), (1, d21)), 2),
        ("case-iv-two-edges", _combine((2 * k - 2, w["w1"]), (1, w["w2"]), (2, w["wm"])), 1),
        ("case-iv-overlap", _combine((2, w["w2"]), (2, w["wm"]), (2 * (k - 2), d21)), 1),
        ("case-iv-linear", _combine((2, w["w2"]), (3, w["wm"]), (3 * k - 4, d21)), 2),
        ("base-single-edge", _combine((k, w["w1"]), (1, w["wm"])), 1),
    ]
    out = [CaseConstraint(label, label, coeffs, mult) for label, coeffs, mult in cases]
    out += [
        CaseConstraint("ordering", "ordering:w1<=w2", d21, 0),
        CaseConstraint("ordering", "ordering:w2<=w3", d32, 0),
        CaseConstraint("ordering", "ordering:w3<=w4", d43, 0),
        CaseConstraint("concavity", "concavity:w4-w3<=w3-w2", _combine((1, d32), (-1, d43)), 0),
        CaseConstraint("concavity", "concavity:w3-w2<=w2-w1", _combine((1, d21), (-1, d32)), 0),
        CaseConstraint("nonnegativity", "nonnegativity:w1>=0", {"w1": 1}, 0),
    ]
    return out


# -- checking --------------------------------------------------------------

@dataclass(frozen=True)
class ConstraintCheck:
    constraint: CaseConstraint
    lhs: Fraction
    rhs: Fraction

    @property
    def slack(self) -> Fraction:
        return self.lhs - self.rhs

    @property
    def satisfied(self) -> bool:
        return self.slack >= 0

    @property
    def binding(self) -> bool:
        return self.slack == 0


@dataclass
class CertificateReport:
    k: int
    scheme: WeightScheme
    checks: list[ConstraintCheck]
    # constraints failing by no more than the printed weights' rounding
    within_precision: list[str] = field(default_factory=list)
    discrepancies: list[str] = field(default_factory=list)
    caveat: str = CAVEAT

    @property
    def verdict(self) -> bool:
        return all(c.satisfied for c in self.checks)

    @property
    def violated(self) -> list[str]:
        return [c.constraint.name for c in self.checks if not c.satisfied]

    @property
    def binding(self) -> list[str]:
        return [c.constraint.name for c in self.checks if c.binding]

    @property
    def implied_bound(self) -> Fraction:
        return self.scheme.implied_bound

    def check(self, name: str) -> ConstraintCheck:
        return next(c for c in self.checks if c.constraint.name == name)

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "scheme": {"name": self.scheme.name, "C": str(self.scheme.C),
                       **{v: str(x) for v, x in self.scheme.as_dict().items()}},
            "verdict": "pass" if self.verdict else "fail",
            "implied_bound": str(self.implied_bound),
            "implied_bound_decimal": float(self.implied_bound),
            "constraints": [
                {"name": c.constraint.name, "lhs": str(c.lhs), "rhs": str(c.rhs),
                 "slack": str(c.slack), "satisfied": c.satisfied, "binding": c.binding}
                for c in self.checks
            ],
            "binding": self.binding,
            "within_printing_precision": self.within_precision,
            "discrepancies": self.discrepancies,
            "caveat": self.caveat,
        }

    def to_markdown(self) -> str:
        lines = [
            f"Scheme `{self.scheme.name or 'custom'}` at k={self.k}, C={self.scheme.C}: "
            f"**{'PASS' if self.verdict else 'FAIL'}**, implied bound "
            f"{self.implied_bound} = {float(self.implied_bound):.6f}",
            "",
            "| constraint | LHS | RHS | slack | binding |",
            "|---|---|---|---|---|",
        ]
        for c in self.checks:
            flag = "yes" if c.binding else ("VIOLATED" if not c.satisfied else "")
            lines.append(f"| {c.constraint.name} | {c.lhs} | {c.rhs} | {c.slack} | {flag} |")
        lines.append("")
        for note in self.within_precision:
            lines.append(f"- within printing precision: {note}")
        for note in self.discrepancies:
            lines.append(f"- discrepancy: {note}")
        lines.append(f"- note: {self.caveat}")
        return "\n".join(lines) + "\n"

    def to_text(self) -> str:
        width = max(len(c.constraint.name) for c in self.checks)
        out = [f"k={self.k} scheme={self.scheme.name or 'custom'} C={self.scheme.C}"]
        for c in self.checks:
            status = "binding" if c.binding else ("ok" if c.satisfied else "VIOLATED")
            out.append(f"  {c.constraint.name:<{width}}  lhs={c.lhs}  rhs={c.rhs}  "
                       f"slack={c.slack}  {status}")
        out.append(f"verdict: {'pass' if self.verdict else 'fail'}")
        out.append(f"implied bound on c_{self.k}: {self.implied_bound} "
                   f"= {float(self.implied_bound):.6f}")
        out += [f"within printing precision: {n}" for n in self.within_precision]
        out += [f"discrepancy: {n}" for n in self.discrepancies]
        out.append(f"note: {self.caveat}")
        return "\n".join(out) + "\n"


def check_scheme(k: int, s: WeightScheme) -> CertificateReport:
    checks = [ConstraintCheck(c, c.lhs(s), c.rhs(s.C)) for c in generate_constraints(k)]
    report = CertificateReport(k, s, checks)
    if s.precision is not None:
        for c in checks:
            tol = s.precision * sum(abs(a) for a in c.constraint.coeffs.values())
            if not c.satisfied and -c.slack <= tol:
                report.within_precision.append(
                    f"{c.constraint.name} short by {-c.slack} "
                    f"(printed weights carry up to {tol} of rounding here)")
    if k == 7 and s.as_dict() == LEMMA7.as_dict():
        for c in checks:
            printed = PRINTED_K7.get(c.constraint.name)
            if printed is not None and printed != c.lhs:
                report.discrepancies.append(
                    f"{c.constraint.name}: formula gives {c.lhs}, printed value is {printed}")
    return report


# -- weight function -------------------------------------------------------

def weight_of(h: Hypergraph, s: WeightScheme) -> Fraction:
    """w(H) = w1 n1 + w2 n2 + w3 n3 + w4 n_{>=4} + wm m."""
    if h.k is not None and h.k != s.k:
        raise ValueError(f"scheme targets k={s.k}, hypergraph has k={h.k}")
    if any(len(e) != s.k for e in h.edges):
        raise ValueError(f"hypergraph is not {s.k}-uniform")
    prof = degree_profile(h)
    return (s.w1 * prof.count(1) + s.w2 * prof.count(2) + s.w3 * prof.count(3)
            + s.w4 * prof.count_at_least(4) + s.wm * h.m)


# -- optimization ----------------------------------------------------------

@dataclass
class Optimization:
    scheme: WeightScheme
    outcome: rlp.LpOutcome
    report: CertificateReport
    program: rlp.LinearProgram

    @property
    def bound(self) -> Fraction:
        return self.outcome.value / self.scheme.C

    def binding_labels(self) -> list[str]:
        return [self.program.constraints[i].label for i in self.outcome.binding]


def scheme_program(k: int, C=100) -> rlp.LinearProgram:
    """minimize t subject to the case system and every weight <= t."""
    C = rlp.q(C)
    prog = rlp.LinearProgram(list(WEIGHTS) + ["t"], {"t": Fraction(1)},
                             lower_bounds={v: Fraction(0) for v in (*WEIGHTS, "t")})
    for c in generate_constraints(k):
        prog.add(c.coeffs, ">=", c.rhs(C), c.name)
    for v in WEIGHTS:
        prog.add({v: 1, "t": -1}, "<=", 0, f"max-weight:{v}")
    return prog


def optimize_scheme(k: int, C=100) -> Optimization:
    prog = scheme_program(k, C)
    out = rlp.solve(prog)
    if out.status != "optimal":
        raise RuntimeError(f"weight program for k={k} is {out.status}")
    scheme = WeightScheme.of([out.solution[v] for v in WEIGHTS], C, k, name=f"optimized:{k}")
    return Optimization(scheme, out, check_scheme(k, scheme), prog)


# -- fuzzing ---------------------------------------------------------------

@dataclass
class FuzzReport:
    k: int
    scheme: WeightScheme
    trials: int
    seed: int
    counterexamples: list[dict] = field(default_factory=list)
    # largest observed C*tau / w(H) and the instance attaining it
    tightest_ratio: Fraction = Fraction(0)
    tightest_instance: Optional[str] = None

    def to_dict(self) -> dict:
        return {
            "k": self.k, "scheme": self.scheme.name, "trials": self.trials, "seed": self.seed,
            "counterexamples": self.counterexamples,
            "tightest_ratio": str(self.tightest_ratio),
            "tightest_ratio_decimal": float(self.tightest_ratio),
            "tightest_instance": self.tightest_instance,
        }


def _trial(args) -> tuple[int, Fraction, Fraction, Hypergraph]:
    k, s, seed, trial, n_max, m_max, connected = args
    rng = np.random.default_rng([seed, trial])
    n = int(rng.integers(k, n_max + 1))
    m = int(rng.integers(1, min(m_max, math.comb(n, k)) + 1))
    h = random_uniform_hypergraph(k, n, m, rng=rng, require_connected=connected)
    return trial, s.C * tau_exact(h).tau, weight_of(h, s), h


def fuzz_lemma(k: int, s: WeightScheme, trials: int = 1000, seed: int = 0,
               n_max: int = 14, m_max: int = 8, require_connected: bool = False,
               workers: int = 1) -> FuzzReport:
    """Check ``C * tau(H) <= w(H)`` on random k-uniform hypergraphs.

    Trial ``i`` uses its own generator seeded by ``(seed, i)``, so the report
    does not depend on ``workers``.
    """
    if n_max < k:
        raise ValueError(f"n_max={n_max} must be at least k={k}")
    jobs = [(k, s, seed, i, n_max, m_max, require_connected) for i in range(trials)]
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            results = list(pool.map(_trial, jobs, chunksize=max(1, trials // (4 * workers))))
    else:
        results = [_trial(j) for j in jobs]
    report = FuzzReport(k, s, trials, seed)
    for trial, lhs, weight, h in results:
        ratio = lhs / weight if weight else Fraction(0)
        if ratio > report.tightest_ratio:
            report.tightest_ratio = ratio
            report.tightest_instance = dump_hypergraph(h)
        if lhs > weight:
            report.counterexamples.append({
                "trial": trial, "C_tau": str(lhs), "weight": str(weight),
                "instance": dump_hypergraph(h),
            })
    return report


# -- monotonicity in k -----------------------------------------------------

@dataclass
class MonotoneReport:
    scheme: WeightScheme
    k_from: int
    k_to: int
    feasible: dict[int, bool]
    # constraints whose LHS decreases from one k to the next at this scheme
    decreasing: list[str]

    @property
    def all_feasible(self) -> bool:
        return all(self.feasible.values())

    @property
    def implication_holds(self) -> bool:
        """Feasible at k_from and no LHS decreases, so feasible on the whole range."""
        return self.feasible[self.k_from] and not self.decreasing


def scheme_monotone_in_k(s: WeightScheme, k_from: int, k_to: int) -> MonotoneReport:
    if k_to < k_from:
        raise ValueError("k_to must be >= k_from")
    feasible, decreasing = {}, []
    prev = None
    for k in range(k_from, k_to + 1):
        checks = {c.name: c.lhs(s) for c in generate_constraints(k)}
        feasible[k] = check_scheme(k, s).verdict
        if prev is not None:
            decreasing += [f"{name} (k={k - 1}->{k})" for name, v in checks.items()
                           if v < prev[name]]
        prev = checks
    return MonotoneReport(s, k_from, k_to, feasible, decreasing)
