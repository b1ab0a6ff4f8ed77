"""Command-line entry point: ``nclr <command> ...``.

Exit codes: 0 success, 2 unparseable input, 3 failed precondition,
4 the methods (or a verification suite) disagree.
"""

from __future__ import annotations

import argparse
import sys
import time
from typing import Sequence

from nclr.coefficients import CoefficientTable, Method, classical_lr, expand_product, nc_lr
from nclr.combinatorics import is_partition, lc_leq
from nclr.composition_tableaux import canonical_ct, enumerate_sct, rectify_ct
from nclr.crystal import LrTriple, enumerate_lrt
from nclr.formats import (
    ParseError,
    ct_to_dict,
    dumps,
    format_composition,
    frank_to_json,
    parse_composition,
    show_composition,
    table_to_json,
    table_to_tsv,
    tableau_to_dict,
    tableau_to_text,
)
from nclr.frank import enumerate_lr_frank, format_frank
from nclr.verify import MAX_SIZE, VerifyConfig, run_all

EXIT_OK, EXIT_PARSE, EXIT_PRECONDITION, EXIT_DISAGREE = 0, 2, 3, 4


class PreconditionError(ValueError):
    pass


def _composition(text: str) -> tuple[int, ...]:
    try:
        return parse_composition(text)
    except ParseError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _partition(value: tuple[int, ...], name: str) -> tuple[int, ...]:
    if not is_partition(value):
        raise PreconditionError(f"--{name.rstrip('_')} {format_composition(value)} is not a partition")
    return value


def _frank_text(w) -> str:
    return format_frank(w) if all(x <= 9 for x in w) else " | ".join(
        ",".join(map(str, col)) for col in frank_to_json(w)
    )


# ---------------------------------------------------------------------------
# commands; each returns (exit code, text to print)

def cmd_classical(args) -> tuple[int, str]:
    lam, mu, nu = (_partition(getattr(args, k), k) for k in ("lambda_", "mu", "nu"))
    try:
        triple = LrTriple(lam, mu, nu)
    except ValueError as exc:
        raise PreconditionError(str(exc)) from None
    tableaux = enumerate_lrt(triple) if args.list else []
    coeff = len(tableaux) if args.list else classical_lr(lam, mu, nu)
    if args.format == "json":
        record = {"lambda": list(lam), "mu": list(mu), "nu": list(nu), "coeff": coeff}
        if args.list:
            record["tableaux"] = [tableau_to_dict(t) for t in tableaux]
        return EXIT_OK, dumps(record)
    if args.format == "tsv":
        lines = ["lambda\tmu\tnu\tcoeff", f"{format_composition(lam)}\t{format_composition(mu)}\t{format_composition(nu)}\t{coeff}"]
        return EXIT_OK, "\n".join(lines)
    blocks = [str(coeff)] + [tableau_to_text(t) for t in tableaux]
    return EXIT_OK, "\n\n".join(blocks)


def cmd_nc(args) -> tuple[int, str]:
    alpha, beta, gamma = args.alpha, args.beta, args.gamma
    if sum(alpha) + sum(beta) != sum(gamma):
        raise PreconditionError("|alpha| + |beta| must equal |gamma|")
    methods = list(Method) if args.method == "all" else [Method(args.method)]
    values = {m.value: nc_lr(alpha, beta, gamma, m) for m in methods}
    code = EXIT_OK if len(set(values.values())) == 1 else EXIT_DISAGREE
    if args.format == "json":
        record = {"alpha": list(alpha), "beta": list(beta), "gamma": list(gamma), "coeffs": values}
        return code, dumps(record)
    if args.format == "tsv":
        return code, "\n".join(["method\tcoeff"] + [f"{m}\t{v}" for m, v in values.items()])
    if len(values) == 1:
        return code, str(next(iter(values.values())))
    lines = [f"{m}: {v}" for m, v in values.items()]
    if code:
        lines.append("methods disagree")
    return code, "\n".join(lines)


def cmd_expand(args) -> tuple[int, str]:
    if args.method == "all":
        tables = {m: expand_product(args.alpha, args.beta, m) for m in Method}
        first = tables[Method.SCT]
        if any(t.entries != first.entries for t in tables.values()):
            lines = [f"{m.value}: {t.to_dict()['entries']}" for m, t in tables.items()]
            return EXIT_DISAGREE, "\n".join(lines + ["methods disagree"])
        table = first
    else:
        table = expand_product(args.alpha, args.beta, Method(args.method))
    return EXIT_OK, render_table(table, args.format)


def render_table(table: CoefficientTable, fmt: str) -> str:
    if fmt == "json":
        return table_to_json(table)
    if fmt == "tsv":
        return table_to_tsv(table)
    if not table.entries:
        return "(no terms)"
    return "\n".join(f"{show_composition(g)}: {c}" for g, c in sorted(table.entries.items()))


def cmd_enumerate(args) -> tuple[int, str]:
    if args.kind == "lrt":
        lam, mu, nu = (_partition(getattr(args, k), k) for k in ("lambda_", "mu", "nu"))
        try:
            found = enumerate_lrt(LrTriple(lam, mu, nu))
        except ValueError as exc:
            raise PreconditionError(str(exc)) from None
        if args.format == "json":
            return EXIT_OK, dumps([tableau_to_dict(t) for t in found])
        if args.format == "tsv":
            return EXIT_OK, "\n".join(" ".join(map(str, row)) for t in found for row in [_flat(t)])
        return EXIT_OK, "\n\n".join(tableau_to_text(t) for t in found)

    if args.kind == "frank":
        lam, mu = _partition(args.lambda_, "lambda"), _partition(args.mu, "mu")
        try:
            found = enumerate_lr_frank(lam, mu, args.colform)
        except ValueError as exc:
            raise PreconditionError(str(exc)) from None
        if args.format == "json":
            return EXIT_OK, dumps([frank_to_json(w) for w in found])
        return EXIT_OK, "\n".join(_frank_text(w) for w in found)

    gamma, beta = args.gamma, args.beta
    if not lc_leq(beta, gamma):
        raise PreconditionError(f"{show_composition(beta)} is not below {show_composition(gamma)}")
    found = list(enumerate_sct(gamma, beta))
    if args.rectify_to is not None:
        target = canonical_ct(args.rectify_to)
        found = [t for t in found if rectify_ct(t) == target]
    if args.format == "json":
        return EXIT_OK, dumps([ct_to_dict(t) for t in found])
    if args.format == "tsv":
        return EXIT_OK, "\n".join(" ".join(map(str, _flat(t))) for t in found)
    return EXIT_OK, "\n\n".join(tableau_to_text(t) for t in found)


def _flat(t) -> list[int]:
    return [x for row in t.rows for x in row]


def cmd_verify(args) -> tuple[int, str]:
    if args.max_size > MAX_SIZE:
        raise PreconditionError(f"--max-size is capped at {MAX_SIZE}")
    if args.max_size == MAX_SIZE:
        print(f"warning: --max-size {MAX_SIZE} is the slowest setting", file=sys.stderr)
    config = VerifyConfig(max_size=args.max_size, seed=args.seed, workers=args.workers,
                          suites=tuple(args.suite or ()))
    start = time.perf_counter()
    try:
        results = run_all(config)
    except ValueError as exc:
        raise PreconditionError(str(exc)) from None
    elapsed = time.perf_counter() - start
    code = EXIT_OK if all(r.ok for r in results) else EXIT_DISAGREE
    if args.format == "json":
        record = {
            "max_size": args.max_size,
            "seed": args.seed,
            "suites": [{"name": r.name, "passed": r.passed, "failed": r.failed, "failures": r.failures} for r in results],
        }
        return code, dumps(record)
    if args.format == "tsv":
        return code, "\n".join(["suite\tpassed\tfailed"] + [f"{r.name}\t{r.passed}\t{r.failed}" for r in results])
    width = max(len(r.name) for r in results)
    lines = [f"{'PASS' if r.ok else 'FAIL'}  {r.name:<{width}}  {r.passed} passed, {r.failed} failed" for r in results]
    for r in results:
        lines += [f"  {r.name}: {case}" for case in r.failures]
    lines.append(f"max size {args.max_size}, {elapsed:.1f}s")
    return code, "\n".join(lines)


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nclr",
        description="Classical and noncommutative Littlewood-Richardson coefficients. "
        'Compositions are comma separated; pass "" for the empty composition.',
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("pretty", "json", "tsv"), default="pretty")
    sub = parser.add_subparsers(dest="command", required=True)

    def shape_flags(p, *names, required=True):
        for name in names:
            dest = "lambda_" if name == "lambda" else name
            p.add_argument(f"--{name}", dest=dest, type=_composition, required=required, metavar="PARTS")

    p = sub.add_parser("classical", parents=[common], help="classical LR coefficient c^lambda_{nu mu}")
    shape_flags(p, "lambda", "mu", "nu")
    p.add_argument("--list", action="store_true", help="also print the LR tableaux")
    p.set_defaults(run=cmd_classical)

    methods = [m.value for m in Method] + ["all"]
    p = sub.add_parser("nc", parents=[common], help="noncommutative coefficient C^gamma_{alpha beta}")
    shape_flags(p, "alpha", "beta", "gamma")
    p.add_argument("--method", choices=methods, default=Method.SCT.value)
    p.set_defaults(run=cmd_nc)

    p = sub.add_parser("expand", parents=[common], help="all terms of s_alpha * s_beta")
    shape_flags(p, "alpha", "beta")
    p.add_argument("--method", choices=methods, default=Method.SCT.value)
    p.set_defaults(run=cmd_expand)

    p = sub.add_parser("enumerate", parents=[common], help="list LR tableaux, compatible frank words or SCTs")
    p.add_argument("kind", choices=("lrt", "frank", "sct"))
    shape_flags(p, "lambda", "mu", "nu", "colform", "gamma", "beta", required=False)
    p.add_argument("--rectify-to", type=_composition, metavar="PARTS",
                   help="for sct: keep tableaux rectifying to the canonical tableau of this composition")
    p.set_defaults(run=cmd_enumerate)

    p = sub.add_parser("verify", parents=[common], help="run the exhaustive property sweeps")
    p.add_argument("--max-size", type=int, default=7)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--suite", action="append", help="run only this suite (repeatable)")
    p.set_defaults(run=cmd_verify)
    return parser


_REQUIRED = {
    "lrt": ("lambda_", "mu", "nu"),
    "frank": ("lambda_", "mu", "colform"),
    "sct": ("gamma", "beta"),
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.command == "enumerate":
        missing = [k for k in _REQUIRED[args.kind] if getattr(args, k) is None]
        if missing:
            flags = ", ".join("--" + k.rstrip("_") for k in missing)
            print(f"nclr enumerate {args.kind}: missing {flags}", file=sys.stderr)
            return EXIT_PARSE
    try:
        code, text = args.run(args)
    except PreconditionError as exc:
        print(f"nclr: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except ValueError as exc:
        print(f"nclr: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
