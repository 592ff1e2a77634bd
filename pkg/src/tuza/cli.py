"""Command line front end.

Exit codes: 0 success, 1 domain error (bad k, invalid scheme), 2 I/O or
parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import certificates as cert
from . import hypergraph as hg
from . import lp as rlp
from .constructions import DomainError, block_layout, tuza_instance
from .report import bounds_report, render_csv, render_markdown, render_text
from .transversal import LimitExceeded, greedy_transversal, tau_bruteforce, tau_exact

EXIT_OK, EXIT_DOMAIN, EXIT_IO = 0, 1, 2


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def parse_range(text: str) -> range:
    try:
        if ".." in text:
            a, b = text.split("..", 1)
            lo, hi = int(a), int(b)
        else:
            lo = hi = int(text)
    except ValueError:
        raise CliError(f"bad range {text!r}, expected A..B", EXIT_DOMAIN) from None
    if hi < lo:
        raise CliError(f"empty range {text!r}", EXIT_DOMAIN)
    return range(lo, hi + 1)


def load_scheme(source: str, k: int) -> cert.WeightScheme:
    if source == "lemma7":
        scheme = cert.LEMMA7
    elif source.startswith("table2:"):
        try:
            scheme = cert.table2_scheme(int(source.split(":", 1)[1]))
        except (KeyError, ValueError) as exc:
            raise CliError(str(exc), EXIT_DOMAIN) from None
    elif source == "optimized":
        scheme = cert.optimize_scheme(k).scheme
    else:
        try:
            with open(source) as fh:
                d = json.load(fh)
            scheme = cert.WeightScheme.of([d[v] for v in cert.WEIGHTS], d["C"],
                                          int(d.get("k", k)), name=d.get("name", source))
        except OSError as exc:
            raise CliError(f"cannot read scheme {source}: {exc}", EXIT_IO) from None
        except (json.JSONDecodeError, KeyError, ValueError, ZeroDivisionError) as exc:
            raise CliError(f"cannot parse scheme {source}: {exc}", EXIT_IO) from None
    bad = scheme.invariant_violations()
    if bad:
        raise CliError(f"scheme {scheme.name or source} violates: {', '.join(bad)}", EXIT_DOMAIN)
    return scheme


def emit(text: str, output) -> None:
    if output:
        try:
            with open(output, "w") as fh:
                fh.write(text)
        except OSError as exc:
            raise CliError(f"cannot write {output}: {exc}", EXIT_IO) from None
    else:
        sys.stdout.write(text)


def _check_k(k: int, low: int = 2) -> None:
    if k < low:
        raise CliError(f"k={k} out of domain (need k >= {low})", EXIT_DOMAIN)


# -- commands --------------------------------------------------------------

def cmd_construct(args) -> int:
    try:
        h = tuza_instance(args.k)
    except DomainError as exc:
        raise CliError(str(exc), EXIT_DOMAIN) from None
    emit(hg.dumps(h), args.output)
    summary = f"n={h.n} m={h.m} k={h.k}\n"
    (sys.stdout if args.output else sys.stderr).write(summary)
    return EXIT_OK


def cmd_tau(args) -> int:
    try:
        h = hg.load(args.input)
    except OSError as exc:
        raise CliError(f"cannot read {args.input}: {exc}", EXIT_IO) from None
    except hg.HypergraphError as exc:
        raise CliError(f"{args.input}: {exc}", EXIT_IO) from None
    if args.method == "greedy":
        witness = greedy_transversal(h)
        d = {"method": "greedy", "size": len(witness), "witness": list(witness)}
    else:
        try:
            res = tau_exact(h) if args.method == "exact" else tau_bruteforce(h, args.limit)
        except LimitExceeded as exc:
            raise CliError(str(exc), EXIT_DOMAIN) from None
        d = {"method": args.method, "tau": res.tau, "witness": list(res.witness),
             "nodes_explored": res.nodes_explored}
    if args.format == "text":
        lines = [f"{key}: {' '.join(map(str, v)) if isinstance(v, list) else v}"
                 for key, v in d.items()]
        emit("\n".join(lines) + "\n", args.output)
    else:
        emit(json.dumps(d) + "\n", args.output)
    return EXIT_OK


def _report_text(report: cert.CertificateReport, fmt: str) -> str:
    if fmt == "markdown":
        return report.to_markdown()
    if fmt == "json":
        return json.dumps(report.to_dict(), indent=2) + "\n"
    return report.to_text()


def cmd_weights(args) -> int:
    _check_k(args.k)
    if args.action == "check":
        scheme = load_scheme(args.scheme or "lemma7", args.k)
        emit(_report_text(cert.check_scheme(args.k, scheme), args.format), args.output)
    elif args.action == "optimize":
        opt = cert.optimize_scheme(args.k, Fraction(args.C))
        if args.format == "json":
            d = {"bound": str(opt.bound), "bound_decimal": float(opt.bound),
                 "binding": opt.binding_labels(), "lp": rlp.outcome_to_dict(opt.outcome),
                 "report": opt.report.to_dict()}
            emit(json.dumps(d, indent=2) + "\n", args.output)
        else:
            head = (f"optimized bound on c_{args.k}: {opt.bound} = {float(opt.bound):.6f}\n"
                    f"binding: {', '.join(opt.binding_labels())}\n")
            emit(head + _report_text(opt.report, args.format), args.output)
    elif args.action == "fuzz":
        scheme = load_scheme(args.scheme or "optimized", args.k)
        if scheme.k != args.k:
            raise CliError(f"scheme targets k={scheme.k}, not k={args.k}", EXIT_DOMAIN)
        if args.n_max < args.k:
            raise CliError(f"--n-max must be at least k={args.k}", EXIT_DOMAIN)
        rep = cert.fuzz_lemma(args.k, scheme, args.trials, args.seed, args.n_max,
                              args.m_max, workers=args.workers)
        if args.format == "json":
            emit(json.dumps(rep.to_dict(), indent=2) + "\n", args.output)
        else:
            text = (f"k={rep.k} scheme={scheme.name} trials={rep.trials} seed={rep.seed}\n"
                    f"counterexamples: {len(rep.counterexamples)}\n"
                    f"tightest C*tau/w(H): {rep.tightest_ratio} = {float(rep.tightest_ratio):.6f}\n")
            for ce in rep.counterexamples:
                text += f"counterexample (trial {ce['trial']}):\n{ce['instance']}"
            emit(text, args.output)
    else:  # monotone
        ks = parse_range(args.range) if args.range else range(args.k, args.k + 1)
        scheme = load_scheme(args.scheme or f"table2:{ks[0]}", ks[0])
        rep = cert.scheme_monotone_in_k(scheme, ks[0], ks[-1])
        d = {"scheme": scheme.name, "k_from": rep.k_from, "k_to": rep.k_to,
             "feasible": {str(k): v for k, v in rep.feasible.items()},
             "decreasing": rep.decreasing, "implication_holds": rep.implication_holds}
        if args.format == "json":
            emit(json.dumps(d, indent=2) + "\n", args.output)
        else:
            lines = [f"scheme {scheme.name}, k={rep.k_from}..{rep.k_to}"]
            lines += [f"  k={k}: {'feasible' if v else 'INFEASIBLE'}" for k, v in rep.feasible.items()]
            lines.append(f"decreasing constraint LHS: {', '.join(rep.decreasing) or 'none'}")
            emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK


def cmd_table(args) -> int:
    ks = parse_range(args.range)
    if ks[0] < 2:
        raise CliError("table needs k >= 2", EXIT_DOMAIN)
    rows = bounds_report(ks, args.ub_source)
    render = {"markdown": render_markdown, "csv": render_csv, "text": render_text}[args.format]
    emit(render(rows), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tuza", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="write the 6-edge lower-bound instance")
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--output", "-o")
    c.set_defaults(func=cmd_construct)

    t = sub.add_parser("tau", help="transversal number of an instance file")
    t.add_argument("input")
    t.add_argument("--method", choices=("exact", "brute", "greedy"), default="exact")
    t.add_argument("--limit", type=int, default=None, help="size cap for --method brute")
    t.add_argument("--format", choices=("text", "json"), default="text")
    t.add_argument("--output", "-o")
    t.set_defaults(func=cmd_tau)

    w = sub.add_parser("weights", help="check, optimize or fuzz weight certificates")
    w.add_argument("action", choices=("check", "optimize", "fuzz", "monotone"))
    w.add_argument("--k", type=int, default=7)
    w.add_argument("--scheme", help="lemma7, table2:<k>, optimized, or a JSON file")
    w.add_argument("--C", default="100", help="normalization for optimize")
    w.add_argument("--range", help="k range A..B for monotone")
    w.add_argument("--trials", type=int, default=1000)
    w.add_argument("--seed", type=int, default=0)
    w.add_argument("--n-max", type=int, default=14)
    w.add_argument("--m-max", type=int, default=8)
    w.add_argument("--workers", type=int, default=1)
    w.add_argument("--format", choices=("text", "markdown", "json"), default="text")
    w.add_argument("--output", "-o")
    w.set_defaults(func=cmd_weights)

    tb = sub.add_parser("table", help="known vs proposed bounds per k")
    tb.add_argument("--range", default="7..17")
    tb.add_argument("--format", choices=("markdown", "csv", "text"), default="markdown")
    tb.add_argument("--ub-source", choices=("auto", "table2", "optimize"), default="auto")
    tb.add_argument("--output", "-o")
    tb.set_defaults(func=cmd_table)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
