"""Command-line front end.

Exit codes: 0 on success, 1 when a verification suite reports a failed
identity, 2 on argument or input errors.  With ``--json`` every output
line is one JSON object mirroring the text output.  Output ordering is
deterministic for fixed inputs and seeds.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .errors import SchurforgeError
from .lambdaring import WittSeries, adams_on_witt
from .laurent import parse_laurent
from .partitions import Partition, dim_poly_eval, partitions_of
from .repring import ev, format_rd, g_map, lambda_sigma
from .series import format_series, parse_series
from .symfunc import SymFunc, lr
from .symgroup import Permutation, character_table
from .tensormodel import (
    char_series,
    gobject_from_json,
    parse_graded,
    preset_gobject,
    sym_action,
)
from .verify import DEFAULT_SEED, SUITE_NAMES, run_suite


def _emit(args, text: str, payload: dict):
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _cmd_partitions(args) -> int:
    for pi in partitions_of(args.n):
        _emit(args, str(pi), {"command": "partitions", "n": args.n, "partition": str(pi)})
    return 0


def _cmd_char_table(args) -> int:
    table = character_table(args.n)
    classes = [str(mu) for mu in table.classes]
    sizes = [table.class_sizes[mu] for mu in table.classes]
    _emit(
        args,
        "classes: " + "  ".join(classes),
        {"command": "char-table", "n": args.n, "classes": classes, "sizes": sizes},
    )
    if not args.json:
        print("sizes:   " + "  ".join(str(s) for s in sizes))
    for pi in table.irreps:
        row = [table.chi(pi, mu) for mu in table.classes]
        _emit(
            args,
            f"chi[{pi}]: " + " ".join(str(v) for v in row),
            {"command": "char-table", "irrep": str(pi), "values": row},
        )
    return 0


def _cmd_lr(args) -> int:
    value = lr(
        Partition.parse(args.mu), Partition.parse(args.eta), Partition.parse(args.pi)
    )
    _emit(
        args,
        str(value),
        {
            "command": "lr",
            "mu": args.mu,
            "eta": args.eta,
            "pi": args.pi,
            "value": value,
        },
    )
    return 0


def _cmd_schur_dim(args) -> int:
    value = dim_poly_eval(Partition.parse(args.pi), args.m)
    _emit(
        args,
        str(value),
        {"command": "schur-dim", "pi": args.pi, "m": args.m, "value": value},
    )
    return 0


def _cmd_schur_decompose(args) -> int:
    x = parse_graded(args.dims)
    series = lambda_sigma(x, args.n, bound=args.bound)
    rd = series.coefficient(args.n)
    _emit(
        args,
        format_rd(rd),
        {
            "command": "schur-decompose",
            "dims": str(x),
            "n": args.n,
            "decomposition": format_rd(rd),
        },
    )
    return 0


def _load_rep(spec: str):
    if os.path.exists(spec):
        with open(spec, encoding="utf-8") as fh:
            return gobject_from_json(json.load(fh))
    return preset_gobject(spec)


def _cmd_char_series(args) -> int:
    gob = _load_rep(args.rep)
    if gob.group.name.startswith("sym"):
        element = Permutation.from_cycles(args.element, int(gob.group.name[3:]))
    else:
        element = int(args.element) % len(gob.group.elements)
    series = char_series(gob, element, args.order, bound=args.bound)
    text = format_series(series)
    _emit(
        args,
        text,
        {
            "command": "char-series",
            "rep": args.rep,
            "element": str(element),
            "order": args.order,
            "series": text,
        },
    )
    return 0


def _cmd_adams(args) -> int:
    f = parse_series(args.series)
    # the literal is a polynomial: higher coefficients vanish, so extend
    # the order enough to read off psi_n at the written precision
    order = max(f.order, 1)
    witt = WittSeries(list(f.coeffs) + [0] * (order * args.n - f.order), order * args.n)
    result = adams_on_witt(witt, args.n).truncate(order)
    text = format_series(result)
    _emit(
        args,
        text,
        {"command": "adams", "series": args.series, "n": args.n, "result": text},
    )
    return 0


def _cmd_ev(args) -> int:
    x = parse_laurent(getattr(args, "class"))
    value = ev(x, SymFunc.schur(Partition.parse(args.schur)))
    _emit(
        args,
        str(value),
        {
            "command": "ev",
            "class": getattr(args, "class"),
            "schur": args.schur,
            "value": str(value),
        },
    )
    return 0


def _cmd_verify(args) -> int:
    seed = args.seed
    if seed is None:
        seed = int(os.environ.get("SCHURFORGE_SEED", DEFAULT_SEED))
    records = run_suite(args.suite, seed=seed, bound=args.bound)
    failures = 0
    per_suite: dict[str, list[str]] = {}
    for rec in records:
        status = "PASS" if rec["ok"] else "FAIL"
        if not rec["ok"]:
            failures += 1
        per_suite.setdefault(rec["suite"], []).append(rec["check"])
        line = f"{status} {rec['suite']}/{rec['check']}: {rec['identity']}"
        if rec["detail"]:
            line += f" [{rec['detail']}]"
        _emit(args, line, rec)
    summary = {
        "command": "verify",
        "suite": args.suite,
        "seed": seed,
        "checks": len(records),
        "failures": failures,
    }
    if args.json:
        manifest = {
            "type": "manifest",
            "suites": {s: sorted(names) for s, names in sorted(per_suite.items())},
            **summary,
        }
        print(json.dumps(manifest, sort_keys=True))
    else:
        print(f"{len(records) - failures}/{len(records)} checks passed (seed {seed})")
    return 1 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="schurforge",
        description="Exact symmetric-function, Witt-vector and Schur-functor computations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(fn=fn)
        p.add_argument("--json", action="store_true", help="one JSON object per line")
        return p

    p = add("partitions", _cmd_partitions, help="list the partitions of n")
    p.add_argument("n", type=int)

    p = add("char-table", _cmd_char_table, help="character table of Sigma_n")
    p.add_argument("n", type=int)

    p = add("lr", _cmd_lr, help="Littlewood-Richardson coefficient c^pi_(mu,eta)")
    p.add_argument("mu")
    p.add_argument("eta")
    p.add_argument("pi")

    p = add("schur-dim", _cmd_schur_dim, help="dimension polynomial of pi at m")
    p.add_argument("pi")
    p.add_argument("m", type=int)

    p = add(
        "schur-decompose",
        _cmd_schur_decompose,
        help="isotypic decomposition of the n-th tensor power",
    )
    p.add_argument("--dims", required=True, help='graded dimensions, e.g. "{0:2}"')
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--bound", type=int, default=None, help="tensor power size cap")

    p = add("char-series", _cmd_char_series, help="characteristic series of an element")
    p.add_argument("--rep", required=True, help="preset name or JSON file")
    p.add_argument("--element", required=True, help='cycle notation, e.g. "(1 2)"')
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--bound", type=int, default=None)

    p = add("adams", _cmd_adams, help="Adams operation on a series with constant term 1")
    p.add_argument("--series", required=True, help='series literal, e.g. "1 + 2*t"')
    p.add_argument("--n", type=int, required=True)

    p = add("ev", _cmd_ev, help="evaluate a Schur functor on a K0 class")
    p.add_argument("--class", required=True, help='Laurent literal, e.g. "1 - q"')
    p.add_argument("--schur", required=True, help='partition literal, e.g. "1,1"')

    p = add("verify", _cmd_verify, help="run identity verification suites")
    p.add_argument(
        "suite",
        nargs="?",
        default="all",
        choices=SUITE_NAMES + ("all",),
        help="suite name (default: all)",
    )
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--bound", type=int, default=None)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return args.fn(args)
    except (SchurforgeError, ValueError, ArithmeticError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main_entry():
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
