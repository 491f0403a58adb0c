"""Command-line surface: construct, analyze, count, enumerate, verify.

Every machine-readable result is wrapped in the envelope
{"schema": "moonlab/v1", "command": ..., "result": ...} with sorted keys,
so identical invocations produce identical bytes no matter the worker
count.  Counts at or above 2**53 are emitted as decimal strings; JSON
numbers past that point stop being exact integers in most consumers.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .analysis import analyze
from .core import (
    ParameterError,
    ResourceGuardError,
    TrnFormatError,
    build_extremal,
    build_extremal_minus,
    build_hatted,
    build_path_extremal,
    build_transitive,
    format_trn,
    parse_trn,
)
from .counting import (
    cycle_counts,
    cycle_counts_through,
    hamiltonian_path_count,
    strong_sub_counts,
)
from .extremal import DouglasParams, build_douglas, formula_c, formula_c_through
from .iso import ClassFilter, cached_bodies, count_classes, trnset_header
from .verify import CheckReport, check, check_all

_BIG = 1 << 53


class _Parser(argparse.ArgumentParser):
    """argparse that raises instead of exiting, so usage errors all leave
    through one door with exit code 2."""

    def error(self, message):
        raise ParameterError(message)


def _jsonable(x):
    if isinstance(x, bool):
        return x
    if isinstance(x, int):
        return str(x) if abs(x) >= _BIG else x
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    return x


def _emit(out, command: str, result) -> None:
    doc = {"schema": "moonlab/v1", "command": command,
           "result": _jsonable(result)}
    out.write(json.dumps(doc, sort_keys=True) + "\n")


def _read_trn(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as e:
        raise TrnFormatError(f"cannot read {path}: {e.strerror}") from None


def _require(args, names: list[str], family: str) -> None:
    missing = [f"--{x.replace('_', '-')}" for x in names
               if getattr(args, x) is None]
    if missing:
        raise ParameterError(f"family {family} requires {' '.join(missing)}")


def _cmd_build(args, out) -> int:
    fam = args.family
    if fam == "tt":
        _require(args, ["n"], fam)
        t = build_transitive(args.n)
    elif fam == "path":
        _require(args, ["n"], fam)
        t = build_path_extremal(args.n)
    elif fam == "extremal":
        _require(args, ["d", "n"], fam)
        t = build_extremal(args.d, args.n)
    elif fam == "extremal-minus":
        _require(args, ["d", "n"], fam)
        t = build_extremal_minus(args.d, args.n)
    elif fam == "hatted":
        _require(args, ["kind", "n"], fam)
        t = build_hatted(args.kind, args.n)
    else:  # douglas
        _require(args, ["d", "n", "h"], fam)
        try:
            vec = tuple(int(part, 10) for part in args.h.split(","))
        except ValueError:
            raise ParameterError(
                f"--h wants comma-separated integers, got {args.h!r}"
            ) from None
        t = build_douglas(DouglasParams(args.d, args.n, vec))
    text = format_trn(t)
    if args.output and args.output != "-":
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        out.write(text)
    return 0


def _cmd_analyze(args, out) -> int:
    rep = analyze(parse_trn(_read_trn(args.trn)))
    result = {
        "n": rep.n,
        "strong": rep.strong,
        "diameter": rep.diameter,
        "dist": [list(row) for row in rep.dist],
        "non_critical": list(rep.non_critical),
        "critical": list(rep.critical),
        "ncr_components": [list(c) for c in rep.ncr_components],
    }
    _emit(out, "analyze", result)
    return 0


def _cmd_count(args, out) -> int:
    t = parse_trn(_read_trn(args.trn))
    if args.through is not None:
        c = cycle_counts_through(t, args.through)
    else:
        c = cycle_counts(t).c
    s = strong_sub_counts(t) if args.strong_subs else None
    if args.format == "csv":
        if args.ham_paths:
            raise ParameterError("csv covers census tables only; "
                                 "drop --ham-paths or use json")
        out.write("ell,c,s\n")
        for ell in range(3, t.n + 1):
            tail = s[ell] if s is not None else ""
            out.write(f"{ell},{c[ell]},{tail}\n")
        return 0
    result: dict = {"n": t.n, "c": c}
    if args.through is not None:
        result["through"] = args.through
    if s is not None:
        result["s"] = s
    if args.ham_paths:
        result["ham_paths"] = hamiltonian_path_count(t)
    _emit(out, "count", result)
    return 0


def _cmd_enumerate(args, out) -> int:
    flt = ClassFilter(strong=args.strong, diam_le=args.diam_le,
                      diam_eq=args.diam_eq)
    cache_dir = Path(args.cache_dir) if args.cache else None
    count_classes(args.n)  # fail the order guard before emitting anything
    out.write(trnset_header(args.n, flt) + "\n")
    for body in cached_bodies(args.n, flt, cache_dir):
        out.write(body + "\n")
    return 0


def _report_dict(r: CheckReport) -> dict:
    cx = None
    if r.counterexample is not None:
        cx = {"trn": r.counterexample.trn,
              "clause": r.counterexample.clause,
              "context": r.counterexample.context}
    return {
        "check_id": r.check_id,
        "params": r.params,
        "universe_size": r.universe_size,
        "outcome": r.outcome,
        "extremal_value": r.extremal_value,
        "extremal_witnesses": list(r.extremal_witnesses),
        "counterexample": cx,
        "notes": r.notes,
    }


def _cmd_verify(args, out) -> int:
    if args.all:
        if args.check is not None:
            raise ParameterError("--all and --check are mutually exclusive")
        if args.n_max is None:
            raise ParameterError("--all requires --n-max")
        reports = check_all(args.n_max, parallelism=args.parallelism)
    else:
        if args.check is None:
            raise ParameterError("pass --check ID or --all")
        params = {name: getattr(args, name)
                  for name in ("n", "d", "ell", "h")
                  if getattr(args, name) is not None}
        reports = [check(args.check, **params)]
    for r in reports:
        _emit(out, "verify", _report_dict(r))
    return 1 if any(r.outcome == "refuted" for r in reports) else 0


def _cmd_formula(args, out) -> int:
    if args.through:
        if args.ell is not None:
            raise ParameterError("--through is a per-vertex bound; "
                                 "it takes no --ell")
        value = formula_c_through(args.d, args.n)
    else:
        if args.ell is None:
            raise ParameterError("pass --ell, or --through for the "
                                 "per-vertex bound")
        value = formula_c(args.d, args.n, args.ell)
    result = {"d": args.d, "n": args.n,
              "value": "not-covered" if value is None else value}
    if args.ell is not None:
        result["ell"] = args.ell
    if args.through:
        result["through"] = True
    _emit(out, "formula", result)
    return 0


def _build_parser() -> _Parser:
    parser = _Parser(prog="moonlab", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="construct a named family member")
    p.add_argument("--family", required=True,
                   choices=["tt", "path", "extremal", "extremal-minus",
                            "hatted", "douglas"])
    p.add_argument("--n", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--h", help="comma-separated domination indices")
    p.add_argument("--kind", choices=["right", "left", "both"])
    p.add_argument("-o", "--output", help="TRN output path (default stdout)")
    p.set_defaults(fn=_cmd_build)

    p = sub.add_parser("analyze", help="reachability and criticality report")
    p.add_argument("trn", help="TRN file, or - for stdin")
    p.set_defaults(fn=_cmd_analyze)

    p = sub.add_parser("count", help="circuit census of one tournament")
    p.add_argument("trn", help="TRN file, or - for stdin")
    p.add_argument("--through", type=int, metavar="W",
                   help="count only circuits through vertex W")
    p.add_argument("--strong-subs", action="store_true",
                   help="add strong sub-tournament counts")
    p.add_argument("--ham-paths", action="store_true",
                   help="add the hamiltonian path count")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(fn=_cmd_count)

    p = sub.add_parser("enumerate",
                       help="stream one representative per class")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--strong", action="store_true")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--diam-le", type=int, metavar="D")
    g.add_argument("--diam-eq", type=int, metavar="D")
    p.add_argument("--cache", action="store_true",
                   help="reuse or write a TRNSET cache file")
    p.add_argument("--cache-dir",
                   default=os.environ.get("MOONLAB_CACHE_DIR",
                                          ".moonlab-cache"),
                   help="TRNSET cache directory "
                        "(default $MOONLAB_CACHE_DIR or .moonlab-cache)")
    p.set_defaults(fn=_cmd_enumerate)

    p = sub.add_parser("verify", help="run exhaustive checks")
    p.add_argument("--check", metavar="ID")
    p.add_argument("--n", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--ell", type=int)
    p.add_argument("--h", type=int)
    p.add_argument("--all", action="store_true")
    p.add_argument("--n-max", type=int)
    p.add_argument("--parallelism", type=int, default=1,
                   help="worker count for --all")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("formula", help="closed-form census values")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--ell", type=int)
    p.add_argument("--through", action="store_true")
    p.set_defaults(fn=_cmd_formula)
    return parser


def main(argv=None, stdout=None, stderr=None) -> int:
    out = stdout if stdout is not None else sys.stdout
    err = stderr if stderr is not None else sys.stderr
    try:
        args = _build_parser().parse_args(argv)
        if getattr(args, "parallelism", 1) < 1:
            raise ParameterError("parallelism must be at least 1")
        return args.fn(args, out)
    except ParameterError as e:
        err.write(f"moonlab: usage error: {e}\n")
        return 2
    except TrnFormatError as e:
        err.write(f"moonlab: input error: {e}\n")
        return 3
    except ResourceGuardError as e:
        err.write(f"moonlab: resource guard: {e}\n")
        return 4


if __name__ == "__main__":
    sys.exit(main())
