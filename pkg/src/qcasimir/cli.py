"""Command-line front end: ``qcasimir {g,hc,eigen,schur,express,verify,bench}``."""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from typing import List, Optional

from . import casimir as cz
from . import symfun as sf
from .errors import QCasimirError
from .mpoly import MPoly, dumps
from .render import render_casimir_expression
from .verify import Bounds, run_verify

log = logging.getLogger("qcasimir")

EXIT_OK, EXIT_IDENTITY_FAILURE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _int_list(text: str) -> List[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip() != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--out", metavar="FILE", help="write results here instead of standard output")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for independent cells")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized property subsets")
    common.add_argument("--max-degree", type=int, default=None, help="degree bound for generation checks")

    def ranged(p, n_required=True):
        p.add_argument("--n", type=int, required=n_required)
        g = p.add_mutually_exclusive_group(required=True)
        g.add_argument("--k", type=int)
        g.add_argument("--kmax", type=int, help="compute every k in 0..KMAX")

    parser = argparse.ArgumentParser(prog="qcasimir", description="Harish-Chandra images of quantum Casimirs of U_q(gl_n)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("g", parents=[common], help="the symmetric polynomials G_{n,k}")
    ranged(p)
    p.add_argument("--method", choices=("direct", "recursive", "two_term", "character"), default="direct")

    p = sub.add_parser("hc", parents=[common], help="Harish-Chandra image C0_{n,k}")
    ranged(p)
    p.add_argument("--route", choices=("binomial", "product"), default="binomial")

    p = sub.add_parser("eigen", parents=[common], help="eigenvalue of C_{n,k} on a highest weight module")
    ranged(p, n_required=False)
    p.add_argument("--weight", type=_int_list, required=True, help="dominant weight, e.g. 2,1,0")
    p.add_argument("--method", choices=("direct", "image", "character"), default="direct")

    p = sub.add_parser("schur", parents=[common], help="Schur polynomial of a partition")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--partition", type=_int_list, required=True)
    p.add_argument("--method", choices=("bialternant", "tableaux"), default="bialternant")

    p = sub.add_parser("express", parents=[common], help="expand in the generators G_{n,1..n} (and c)")
    p.add_argument("--n", type=int)
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--k", type=int, help="expand the complete homogeneous polynomial h_k")
    src.add_argument("--input", metavar="FILE", help="polynomial in the MPoly JSON format")

    p = sub.add_parser("verify", parents=[common], help="check every identity on a grid")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument("--weight-bound", type=int, default=2, help="weights range over [-B, B]")

    p = sub.add_parser("bench", parents=[common], help="wall time per (n, k) cell")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--kmax", type=int, required=True)
    return parser


# -- computations (module level so worker processes can pickle them) -------

def _g(n, k, method):
    if method == "direct":
        return cz.g_direct(n, k)
    if method == "recursive":
        return cz.g_recursive(n, k, "sum")
    if method == "two_term":
        return cz.g_recursive(n, k, "two_term")
    return cz.g_character(n, k)


def _hc(n, k, route):
    return cz.hc_image(n, k, route)


def _eigen(coords, k, method):
    w = cz.Weight(tuple(coords))
    if method == "direct":
        return cz.eigenvalue_direct(w, k)
    return cz.eigenvalue_via_hc(w, k, method)


def _star(task):
    fn, args = task
    return fn(*args)


def _map(fn, arglist, jobs):
    tasks = [(fn, a) for a in arglist]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_star, tasks))
    return [_star(t) for t in tasks]


def _ks(args) -> List[int]:
    if args.k is not None:
        if args.k < 0:
            raise UsageError("--k must be nonnegative")
        return [args.k]
    if args.kmax < 0:
        raise UsageError("--kmax must be nonnegative")
    return list(range(args.kmax + 1))


def _emit_ranged(args, ks, values, text_of, json_of, header: dict) -> str:
    if args.format == "json":
        if args.k is not None:
            return dumps(json_of(values[0])) + "\n"
        return dumps({**header, "results": [{"k": k, "value": json_of(v)} for k, v in zip(ks, values)]}) + "\n"
    if args.k is not None:
        return text_of(values[0]) + "\n"
    return "".join(f"k={k}: {text_of(v)}\n" for k, v in zip(ks, values))


def _check_n(n):
    if n is None or n < 1:
        raise UsageError("--n must be a positive integer")


def _cmd_g(args) -> str:
    _check_n(args.n)
    ks = _ks(args)
    if args.method == "character" and 0 in ks:
        raise UsageError("the hook-character expansion needs k >= 1")
    cz.warn_if_large(args.n, max(ks))
    values = _map(_g, [(args.n, k, args.method) for k in ks], args.jobs)
    return _emit_ranged(args, ks, values, str, MPoly.to_json, {"n": args.n})


def _cmd_hc(args) -> str:
    _check_n(args.n)
    ks = _ks(args)
    cz.warn_if_large(args.n, max(ks))
    values = _map(_hc, [(args.n, k, args.route) for k in ks], args.jobs)
    return _emit_ranged(args, ks, values, str, MPoly.to_json, {"n": args.n})


def _cmd_eigen(args) -> str:
    try:
        weight = cz.Weight(tuple(args.weight))
    except (ValueError, QCasimirError) as exc:
        raise UsageError(str(exc))
    if args.n is not None and args.n != weight.n:
        raise UsageError(f"--n {args.n} does not match a weight with {weight.n} coordinates")
    ks = _ks(args)
    cz.warn_if_large(weight.n, max(ks))
    values = _map(_eigen, [(weight.coords, k, args.method) for k in ks], args.jobs)
    return _emit_ranged(args, ks, values, str, lambda v: v.to_json(), {"n": weight.n, "weight": list(weight.coords)})


def _cmd_schur(args) -> str:
    _check_n(args.n)
    try:
        lam = sf.as_partition(args.partition)
        if args.method == "bialternant":
            p = sf.schur_bialternant(lam, args.n)
        else:
            p = sf.schur_tableaux_oracle(lam, args.n)
    except (ValueError, QCasimirError) as exc:
        raise UsageError(str(exc))
    return (p.dumps() if args.format == "json" else str(p)) + "\n"


def _cmd_express(args) -> str:
    if args.input is not None:
        with open(args.input) as fh:
            try:
                p = MPoly.from_json(json.load(fh))
            except (KeyError, TypeError, ValueError) as exc:
                raise UsageError(f"cannot read polynomial from {args.input}: {exc}")
        if args.n is not None and args.n != p.n:
            raise UsageError(f"--n {args.n} does not match the input polynomial (n={p.n})")
    else:
        _check_n(args.n)
        if args.k < 0:
            raise UsageError("--k must be nonnegative")
        p = sf.complete_homogeneous(args.k, args.n)
    try:
        m, expr = cz.center_express(p)
    except QCasimirError as exc:
        raise UsageError(str(exc))
    if args.format == "json":
        if m == 0:
            return expr.dumps() + "\n"
        return dumps({"c_power": 2 * m, "expression": expr.to_json()}) + "\n"
    body = render_casimir_expression(expr)
    if m == 0:
        return body + "\n"
    return f"c^{2 * m}*({body})\n"


def _cmd_verify(args):
    _check_n(args.n)
    if args.kmax < 0 or args.weight_bound < 0:
        raise UsageError("--kmax and --weight-bound must be nonnegative")
    if args.n > 5 or args.kmax > 8:
        log.warning("verify beyond n <= 5, kmax <= 8 may take a long time")
    bounds = Bounds(n=args.n, kmax=args.kmax, weight_bound=args.weight_bound,
                    max_degree=args.max_degree, seed=args.seed)
    report = run_verify(bounds, jobs=args.jobs, fault=getattr(args, "_fault", None))
    if args.format == "json":
        text = dumps({"ok": report.ok, "first_failure": report.first_failure, "table": report.lines}) + "\n"
    else:
        text = "\n".join(report.lines) + "\n"
    return text, report


def _cmd_bench(args) -> str:
    _check_n(args.n)
    header = f"{'n':>3}{'k':>4}{'direct_s':>12}{'recursive_s':>13}{'character_s':>13}{'hc_product_s':>14}"
    lines = [header]
    for n in range(1, args.n + 1):
        for k in range(args.kmax + 1):
            row = []
            for fn in (lambda: cz.g_direct(n, k), lambda: cz.g_recursive(n, k),
                       lambda: cz.g_character(n, k) if k else None, lambda: cz.hc_image(n, k, "product")):
                cz.clear_caches()
                t0 = time.perf_counter()
                fn()
                row.append(time.perf_counter() - t0)
            lines.append(f"{n:>3}{k:>4}{row[0]:>12.6f}{row[1]:>13.6f}{row[2]:>13.6f}{row[3]:>14.6f}")
    if args.format == "json":
        cells = [line.split() for line in lines[1:]]
        return dumps({"columns": header.split(), "rows": cells}) + "\n"
    return "\n".join(lines) + "\n"


_COMMANDS = {
    "g": _cmd_g,
    "hc": _cmd_hc,
    "eigen": _cmd_eigen,
    "schur": _cmd_schur,
    "express": _cmd_express,
    "bench": _cmd_bench,
}


def run(argv: Optional[List[str]] = None, *, fault: Optional[str] = None, stdout=None, stderr=None) -> int:
    """Parse ``argv``, run one command and return the exit code.

    ``fault`` is a test hook forwarded to :func:`run_verify`.
    """
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.jobs < 1:
        print("qcasimir: error: --jobs must be at least 1", file=stderr)
        return EXIT_USAGE
    code = EXIT_OK
    try:
        if args.command == "verify":
            args._fault = fault
            text, report = _cmd_verify(args)
            if not report.ok:
                code = EXIT_IDENTITY_FAILURE
                print(f"identity failure: {report.first_failure}", file=stderr)
        else:
            text = _COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"qcasimir: error: {exc}", file=stderr)
        return EXIT_USAGE
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return code


def main():
    logging.basicConfig(level=logging.WARNING, format="warning: %(message)s")
    sys.exit(run())


if __name__ == "__main__":
    main()
