"""Per-k comparison of known and proposed bounds on c_k."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from .certificates import check_scheme, optimize_scheme, table2_scheme
from .constructions import alon_upper_bound, lai_chang_lower_bound, proposed_lower_bound

# previously published values for small k, carried as constants only
LITERATURE = {
    5: {"lower": Fraction(3, 16), "upper": Fraction(5, 22)},
    6: {"upper": Fraction(2569, 14145)},
}


def truncate4(x: Union[Fraction, float]) -> str:
    """Four decimals, truncated, rendered like ``.1428``."""
    x = Fraction(x)
    if x < 0:
        raise ValueError("negative values are not rendered")
    return _render(x.numerator * 10000 // x.denominator)


def round4(x: Union[Fraction, float]) -> str:
    """Four decimals, round half up, rendered like ``.2780``."""
    x = Fraction(x)
    if x < 0:
        raise ValueError("negative values are not rendered")
    return _render((x.numerator * 20000 + x.denominator) // (2 * x.denominator))


def _render(units: int) -> str:
    whole, frac = divmod(units, 10000)
    return f"{whole if whole else ''}.{frac:04d}"


@dataclass(frozen=True)
class BoundsRow:
    k: int
    known_lb: Fraction
    proposed_lb: Fraction
    proposed_ub: Fraction
    known_ub: float
    ub_source: str

    @property
    def lb_improved(self) -> bool:
        return self.proposed_lb > self.known_lb

    @property
    def ub_improved(self) -> bool:
        return self.proposed_ub < Fraction(self.known_ub)

    # Table convention: lower bounds truncated, upper bounds rounded
    def cells(self) -> tuple[str, str, str, str]:
        return (truncate4(self.known_lb), truncate4(self.proposed_lb),
                round4(self.proposed_ub), round4(self.known_ub))

    def renderings(self) -> dict[str, dict[str, str]]:
        vals = {"known_lb": self.known_lb, "proposed_lb": self.proposed_lb,
                "proposed_ub": self.proposed_ub, "known_ub": self.known_ub}
        return {name: {"truncated": truncate4(v), "rounded": round4(v)} for name, v in vals.items()}


def proposed_upper_bound(k: int, source: str = "auto") -> tuple[Fraction, str]:
    """Upper bound on c_k with the name of the certificate it came from.

    ``auto`` uses the printed weight row when one exists and it passes the
    exact check, and the LP optimum otherwise.
    """
    if source not in ("auto", "table2", "optimize"):
        raise ValueError(f"unknown upper-bound source {source!r}")
    if source in ("auto", "table2"):
        try:
            scheme = table2_scheme(k)
        except KeyError:
            if source == "table2":
                raise
        else:
            report = check_scheme(k, scheme)
            if report.verdict:
                return report.implied_bound, scheme.name
            if source == "table2":
                raise ValueError(f"printed weights for k={k} fail: {report.violated}")
    opt = optimize_scheme(k)
    return opt.bound, opt.scheme.name


def bounds_row(k: int, ub_source: str = "auto") -> BoundsRow:
    ub, src = proposed_upper_bound(k, ub_source)
    return BoundsRow(k, lai_chang_lower_bound(k), proposed_lower_bound(k), ub,
                     alon_upper_bound(k), src)


def bounds_report(ks: Iterable[int], ub_source: str = "auto") -> list[BoundsRow]:
    return [bounds_row(k, ub_source) for k in ks]


HEADERS = ("k", "known LB", "proposed LB", "proposed UB", "known UB")


def render_markdown(rows: list[BoundsRow]) -> str:
    """Markdown table; ``*`` marks a proposed bound that improves the known one."""
    lines = ["| " + " | ".join(HEADERS) + " |", "|" + "---|" * len(HEADERS)]
    for r in rows:
        klb, plb, pub, kub = r.cells()
        plb += "*" if r.lb_improved else ""
        pub += "*" if r.ub_improved else ""
        lines.append(f"| {r.k} | {klb} | {plb} | {pub} | {kub} |")
    return "\n".join(lines) + "\n"


def render_csv(rows: list[BoundsRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["k", "known_lb", "proposed_lb", "proposed_ub", "known_ub",
                "lb_improved", "ub_improved", "known_lb_exact", "proposed_lb_exact",
                "proposed_ub_exact", "ub_source"])
    for r in rows:
        w.writerow([r.k, *r.cells(), int(r.lb_improved), int(r.ub_improved),
                    r.known_lb, r.proposed_lb, r.proposed_ub, r.ub_source])
    return buf.getvalue()


def render_text(rows: list[BoundsRow]) -> str:
    out = ["{:>3}  {:>9}  {:>11}  {:>11}  {:>9}".format(*HEADERS)]
    for r in rows:
        klb, plb, pub, kub = r.cells()
        out.append(f"{r.k:>3}  {klb:>9}  {plb + ('*' if r.lb_improved else ' '):>11}  "
                   f"{pub + ('*' if r.ub_improved else ' '):>11}  {kub:>9}")
    out.append("* improves the known bound")
    return "\n".join(out) + "\n"
