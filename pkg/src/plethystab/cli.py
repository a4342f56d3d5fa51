"""Command-line front end.

    plethystab tableaux --shape 2 --alphabet 3 --matrix
    plethystab b --lambda 2 --mu 2 --nu 2,2
    plethystab a --lambda 2 --mu 2 --nu 4
    plethystab expand --lambda 2 --mu 2 --format json
    plethystab stability --family P1 --lambda 1 --mu 2 --nu 2 --n-max 6
    plethystab sweep --max-weight 3 --n-pad 4

Exit codes: 0 success, 1 usage error, 2 internal assertion or failed sweep.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from typing import Sequence

from .coefficients import NegativeCoefficientError, a_coeff_detailed, a_to_json, b_coeff, schur_expand
from .combinatorics import format_seq, parse_partition, parse_seq
from .harness import run_all
from .oracle import expansion_to_json
from .stability import FAMILIES, FamilySpec, run_report
from .tableaux import enumerate_ssyt, weight

EXIT_OK, EXIT_USAGE, EXIT_ASSERT = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 by default; usage errors here are status 1
    def error(self, message: str):
        raise UsageError(message)


def _partition(text: str):
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _sequence(text: str):
    try:
        return parse_seq(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def dumps(obj) -> str:
    """Compact JSON; key order is insertion order, so a reload re-serializes identically."""
    return json.dumps(obj, separators=(",", ":"))


def _csv(rows: Sequence[Sequence]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue().rstrip("\n")


def _paren(seq) -> str:
    return "(" + format_seq(seq) + ")"


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("table", "json", "csv"), default="table")
    common.add_argument("--threads", type=int,
                        default=int(os.environ.get("PLETHYSTAB_THREADS", "1") or 1))
    common.add_argument("--seed", type=int, default=None)

    parser = _Parser(prog="plethystab", description="Plethysm coefficients by lattice-point counting.")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    p = sub.add_parser("tableaux", parents=[common], help="list t(mu, N)")
    p.add_argument("--shape", type=_partition, required=True)
    p.add_argument("--alphabet", type=int, required=True)
    p.add_argument("--matrix", action="store_true", help="also print the weight matrix")

    # b is defined for arbitrary integer sequences lambda and nu
    p = sub.add_parser("b", parents=[common], help="coefficient of h_nu in h_lambda[s_mu]")
    p.add_argument("--lambda", dest="lam", type=_sequence, required=True)
    p.add_argument("--mu", type=_partition, required=True)
    p.add_argument("--nu", type=_sequence, required=True)

    p = sub.add_parser("a", parents=[common], help="coefficient of s_nu in s_lambda[s_mu]")
    p.add_argument("--lambda", dest="lam", type=_partition, required=True)
    p.add_argument("--mu", type=_partition, required=True)
    p.add_argument("--nu", type=_partition, required=True)

    p = sub.add_parser("expand", parents=[common], help="Schur expansion of s_lambda[s_mu]")
    p.add_argument("--lambda", dest="lam", type=_partition, required=True)
    p.add_argument("--mu", type=_partition, required=True)

    p = sub.add_parser("stability", parents=[common], help="stability report for one family")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--lambda", dest="lam", type=_partition, required=True)
    p.add_argument("--mu", type=_partition, required=True)
    p.add_argument("--nu", type=_partition, required=True)
    p.add_argument("--pi", type=_partition, default=())
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--which", choices=("a", "b"), default="b")

    p = sub.add_parser("sweep", parents=[common], help="run the property sweeps")
    p.add_argument("--max-weight", type=int, default=3)
    p.add_argument("--n-pad", type=int, default=4)
    p.add_argument("--max-product", type=int, default=8)
    p.add_argument("--sample", type=int, default=None,
                   help="check a seeded random subset of the stability specs")
    return parser


def _cmd_tableaux(args) -> str:
    if args.alphabet < 1:
        raise UsageError(f"--alphabet must be positive, got {args.alphabet}")
    tabs = enumerate_ssyt(args.shape, args.alphabet)
    if args.format == "json":
        out = {"shape": list(args.shape), "alphabet": args.alphabet,
               "tableaux": [T.to_json() for T in tabs]}
        if args.matrix:
            out["matrix"] = [list(weight(T)) for T in tabs]
        return dumps(out)
    words = ["/".join("".join(map(str, r)) for r in T.rows if r) for T in tabs]
    if args.format == "csv":
        head = ["index", "tableau"] + ([f"w{j}" for j in range(1, args.alphabet + 1)]
                                       if args.matrix else [])
        rows = [[i, w] + (list(weight(T)) if args.matrix else [])
                for i, (w, T) in enumerate(zip(words, tabs), start=1)]
        return _csv([head] + rows)
    lines = [f"t({format_seq(args.shape)}, {args.alphabet}): {len(tabs)} tableaux"]
    width = max((len(w) for w in words), default=0)
    for w, T in zip(words, tabs):
        lines.append(w.ljust(width) + ("  " + " ".join(map(str, weight(T))) if args.matrix else ""))
    return "\n".join(lines)


def _cmd_b(args) -> str:
    value = b_coeff(args.lam, args.mu, args.nu)
    if args.format == "json":
        return dumps({"lambda": list(args.lam), "mu": list(args.mu), "nu": list(args.nu),
                      "b": str(value)})
    if args.format == "csv":
        return _csv([["lambda", "mu", "nu", "b"],
                     [format_seq(args.lam), format_seq(args.mu), format_seq(args.nu), value]])
    return str(value)


def _cmd_a(args) -> str:
    res = a_coeff_detailed(args.lam, args.mu, args.nu)
    if args.format == "json":
        return dumps(a_to_json(args.lam, args.mu, args.nu, res))
    if args.format == "csv":
        return _csv([["lambda", "mu", "nu", "a", "terms_evaluated", "terms_pruned"],
                     [format_seq(args.lam), format_seq(args.mu), format_seq(args.nu),
                      res.value, res.terms_evaluated, res.terms_pruned]])
    return (f"{res.value}\nterms evaluated: {res.terms_evaluated}\n"
            f"terms pruned: {res.terms_pruned}")


def _cmd_expand(args) -> str:
    expansion = expansion_to_json(schur_expand(args.lam, args.mu))
    if args.format == "json":
        return dumps(expansion)
    if args.format == "csv":
        return _csv([["nu", "coefficient"]] + [[k, v] for k, v in expansion.items()])
    width = max((len(k) for k in expansion), default=0)
    return "\n".join(f"{k.ljust(width)}  {v}" for k, v in expansion.items())


def _cmd_stability(args) -> str:
    try:
        spec = FamilySpec(args.family, args.lam, args.mu, args.nu, args.pi)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    try:
        report = run_report(spec, args.n_max, args.which, args.threads)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    data = report.to_json()
    if args.format == "json":
        return dumps(data)
    if args.format == "csv":
        return _csv([["n", args.which]] + [[n, v] for n, v in enumerate(data["values"])])
    lines = [f"family: {spec.family}",
             f"lambda: {_paren(spec.lam)}  mu: {_paren(spec.mu)}  nu: {_paren(spec.nu)}"
             + (f"  pi: {_paren(spec.pi)}" if spec.pi else "")]
    lines += [f"  n={n}: {v}" for n, v in enumerate(data["values"])]
    lines.append(f"empirical index: {data['empirical_index']}")
    lines.append(f"our bound: {data['our_bound']}")
    lines.append(f"literature bound: {data['literature_bound']}")
    if "printed_bound" in data:
        lines.append(f"interlacing-only bound: {data['printed_bound']}")
    lines.append(f"limit: {data['limit']}")
    lines += [f"note: {x}" for x in data.get("notes", [])]
    return "\n".join(lines)


def _cmd_sweep(args) -> tuple[str, bool]:
    results = run_all(args.max_weight, args.n_pad, args.max_product, args.threads,
                      args.sample, args.seed)
    ok = all(r.passed for r in results)
    if args.format == "json":
        return dumps([{"name": r.name, "passed": r.passed, "instances": r.instances,
                       "seconds": f"{r.seconds:.3f}", "failures": [str(f) for f in r.failures[:5]]}
                      for r in results]), ok
    if args.format == "csv":
        return _csv([["name", "passed", "instances", "seconds"]]
                    + [[r.name, r.passed, r.instances, f"{r.seconds:.3f}"] for r in results]), ok
    return "\n".join(r.line() for r in results), ok


_COMMANDS = {"tableaux": _cmd_tableaux, "b": _cmd_b, "a": _cmd_a, "expand": _cmd_expand,
             "stability": _cmd_stability}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.threads < 1:
            raise UsageError(f"--threads must be positive, got {args.threads}")
        if args.verb == "sweep":
            text, ok = _cmd_sweep(args)
            print(text)
            return EXIT_OK if ok else EXIT_ASSERT
        print(_COMMANDS[args.verb](args))
    except UsageError as exc:
        print(f"plethystab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NegativeCoefficientError, AssertionError) as exc:
        print(f"plethystab: internal assertion failed: {exc}", file=sys.stderr)
        return EXIT_ASSERT
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
