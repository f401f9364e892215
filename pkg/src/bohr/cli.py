"""Command-line front end.

Usage:
    bohr solve --all --K 1                 radii of every equation at K = 1
    bohr solve --eq UnivalentQC --k 1
    bohr sweep --K-min 1 --K-max inf --steps 11 --out radii.csv
    bohr verify --theorem ConvexQC --k 0.5 --seed 7 --count 200
    bohr verify --theorem ConvexQC --k 1 --entry ExtremalConvex --lam 1 --r 0.21
    bohr conjecture --part convex --seed 3 --count 100
    bohr catalog --entry ExampleF --param lam=1

Exit codes: 0 success / all hold, 1 some case fails, 2 usage error,
3 no failures but some verdicts inconclusive.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from collections import Counter

import numpy as np

from . import corpus
from .mapping_catalog import ENTRY_IDS, catalog_coeffs, default_entries, make_entry
from .power_series import DEFAULT_ORDER
from .quasiconformal import K_from_k, k_from_K
from .radius_solvers import EQUATION_IDS, equation, lhs_eval, solve

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INCONCLUSIVE = 0, 1, 2, 3
MIN_VERIFY_ORDER = 64
ORDER_ENV = "BOHR_DEFAULT_ORDER"


class UsageError(ValueError):
    pass


# formatting

def fmt_float(x: float) -> str:
    if isinstance(x, (int, np.integer)) and not isinstance(x, bool):
        return str(x)
    x = float(x)
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    if math.isnan(x):
        return "nan"
    return f"{x:.15g}"


def _jsonable(v):
    if isinstance(v, dict):
        return {k: _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple, np.ndarray)):
        return [_jsonable(x) for x in v]
    if isinstance(v, (complex, np.complexfloating)):
        v = complex(v)
        if v.imag == 0:
            return _jsonable(v.real)
        return [_jsonable(v.real), _jsonable(v.imag)]
    if isinstance(v, (float, np.floating)):
        v = float(v)
        return v if math.isfinite(v) else fmt_float(v)
    if isinstance(v, np.integer):
        return int(v)
    return v


def render(rows: list[dict], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(_jsonable(rows), indent=2) + "\n"
    cells = [{k: (fmt_float(v) if isinstance(v, (float, np.floating)) else str(v))
              for k, v in row.items()} for row in rows]
    header = list(rows[0]) if rows else []
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=header, lineterminator="\n")
        w.writeheader()
        w.writerows(cells)
        return buf.getvalue()
    if fmt == "table":
        widths = {h: max([len(h)] + [len(c[h]) for c in cells]) for h in header}
        lines = ["  ".join(h.ljust(widths[h]) for h in header).rstrip()]
        lines.append("  ".join("-" * widths[h] for h in header))
        lines += ["  ".join(c[h].ljust(widths[h]) for h in header).rstrip() for c in cells]
        return "\n".join(lines) + "\n"
    raise UsageError(f"unknown format {fmt!r}")


def emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", newline="\n", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# argument helpers

def _parse_K(s: str) -> float:
    v = float(s)
    if v < 1:
        raise argparse.ArgumentTypeError(f"K must be >= 1, got {s}")
    return v


def _parse_value(s: str):
    try:
        v = complex(s.replace("i", "j"))
    except ValueError:
        raise UsageError(f"cannot parse parameter value {s!r}") from None
    return v.real if v.imag == 0 else v


def _params(pairs: list[str] | None) -> dict:
    out = {}
    for item in pairs or []:
        if "=" not in item:
            raise UsageError(f"--param expects key=value, got {item!r}")
        key, val = item.split("=", 1)
        out[key.strip()] = _parse_value(val.strip())
    return out


def resolve_k(args, default: float | None = None) -> float:
    if args.k is not None and args.K is not None:
        raise UsageError("give only one of --k and --K")
    if args.K is not None:
        return k_from_K(args.K)
    if args.k is not None:
        if not 0.0 <= args.k <= 1.0:
            raise UsageError(f"k must lie in [0, 1], got {args.k}")
        return args.k
    if default is None:
        raise UsageError("one of --k or --K is required")
    return default


def resolve_order(args) -> int:
    if args.order is not None:
        return args.order
    env = os.environ.get(ORDER_ENV)
    if env:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"{ORDER_ENV} must be an integer, got {env!r}") from None
    return DEFAULT_ORDER


def _entry(args):
    try:
        return make_entry(args.entry, **_params(args.param))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


# commands

def solve_row(eq_id: str, k: float) -> dict:
    radius = solve(eq_id, k)
    eq = equation(eq_id, k)
    return {"eq_id": eq_id, "k": k, "K": K_from_k(k), "radius": radius,
            "residual": lhs_eval(eq_id, k, radius) - eq.target}


def cmd_solve(args) -> int:
    k = resolve_k(args)
    if args.all or args.eq in (None, "all"):
        ids = EQUATION_IDS
    elif args.eq in EQUATION_IDS:
        ids = (args.eq,)
    else:
        raise UsageError(f"unknown equation id {args.eq!r}; expected one of {EQUATION_IDS}")
    emit(render([solve_row(e, k) for e in ids], args.format), args.out)
    return EXIT_OK


def k_grid(args) -> list[float]:
    if args.K_values:
        try:
            Ks = [_parse_K(s) for s in args.K_values.split(",")]
        except (ValueError, argparse.ArgumentTypeError) as exc:
            raise UsageError(f"malformed --K-values: {exc}") from None
        return [k_from_K(K) for K in Ks]
    if args.steps < 2:
        raise UsageError("--steps must be >= 2")
    if args.K_max < args.K_min:
        raise UsageError("--K-max must be >= --K-min")
    if math.isinf(args.K_max):
        # uniform in k when the range reaches K = infinity
        k0 = k_from_K(args.K_min)
        return [k0 + (1.0 - k0) * i / (args.steps - 1) for i in range(args.steps)]
    Ks = np.linspace(args.K_min, args.K_max, args.steps)
    return [k_from_K(float(K)) for K in Ks]


def cmd_sweep(args) -> int:
    if args.eq in (None, "all"):
        ids = EQUATION_IDS
    elif args.eq in EQUATION_IDS:
        ids = (args.eq,)
    else:
        raise UsageError(f"unknown equation id {args.eq!r}")
    ks = k_grid(args)
    rows = [solve_row(e, k) for e in ids for k in ks]
    emit(render(rows, args.format), args.out)
    return EXIT_OK


def _verdict_exit(verdicts: Counter) -> int:
    if verdicts["fails"]:
        return EXIT_FAIL
    if verdicts["inconclusive"]:
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def cmd_verify(args) -> int:
    k = resolve_k(args)
    order = resolve_order(args)
    if order < MIN_VERIFY_ORDER:
        raise UsageError(f"--order must be >= {MIN_VERIFY_ORDER} for verification")
    try:
        theorem = corpus.get_theorem(args.theorem)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    r = args.r if args.r is not None else corpus.theorem_radius(theorem, k) - corpus.RADIUS_MARGIN
    if not 0 < r < 1:
        raise UsageError(f"r must lie in (0, 1), got {r}")
    if args.entry:
        if abs(args.lam) > 1:
            raise UsageError("|lam| must be <= 1")
        case = corpus.fixture_case(theorem, _entry(args), k, args.lam, order)
        results = [(case, corpus.evaluate_case(theorem, case, r))]
    else:
        results = corpus.run_corpus(theorem, k, args.seed, args.count, order, r)
    rows = []
    for case, rep in results:
        rows.append({"case": case.index, "entry": case.entry.id, "k": k, "r": rep.r,
                     "sum": rep.partial_sum, "tail": rep.tail_bound, "dist": rep.dist0,
                     "verdict": rep.verdict})
    emit(render(rows, args.format), args.out)
    verdicts = Counter(rep.verdict for _, rep in results)
    print(f"{theorem.id}: holds={verdicts['holds']} fails={verdicts['fails']} "
          f"inconclusive={verdicts['inconclusive']}", file=sys.stderr)
    return _verdict_exit(verdicts)


def margin_summary(margins: list[float], bins: int = 10) -> dict:
    arr = np.asarray(margins, dtype=float)
    counts, edges = np.histogram(arr, bins=bins)
    return {
        "count": int(arr.size),
        "min_margin": float(arr.min()),
        "mean_margin": float(arr.mean()),
        "max_margin": float(arr.max()),
        "histogram": [{"lo": float(lo), "hi": float(hi), "count": int(c)}
                      for lo, hi, c in zip(edges[:-1], edges[1:], counts)],
    }


def cmd_conjecture(args) -> int:
    k = resolve_k(args, default=1.0)
    order = resolve_order(args)
    try:
        theorem, upper_id = corpus.conjecture_setup(args.part)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    r = args.r if args.r is not None else solve(upper_id, k)
    if args.entry:
        case = corpus.fixture_case(theorem, _entry(args), k, args.lam, order)
        results = [(case, corpus.evaluate_case(theorem, case, r))]
    else:
        results = corpus.run_corpus(theorem, k, args.seed, args.count, order, r)
    # relative margin (dist0 - sum)/dist0 so different maps are comparable
    margins = [rep.margin / rep.dist0 for _, rep in results]
    summary = {"label": "exploratory: sampled evidence only, no pass/fail",
               "part": args.part, "k": k, "r": r, **margin_summary(margins, args.bins)}
    if args.format == "json":
        text = json.dumps(_jsonable(summary), indent=2) + "\n"
    else:
        head = [{key: summary[key] for key in
                 ("label", "part", "k", "r", "count", "min_margin", "mean_margin", "max_margin")}]
        text = render(head, args.format) + render(summary["histogram"], args.format)
    emit(text, args.out)
    return EXIT_OK


def catalog_record(entry, n_coeffs: int = 8) -> dict:
    coeffs = catalog_coeffs(entry, max(n_coeffs - 1, 1)).coeffs[:n_coeffs]
    schema = {name: _jsonable(default) for name, default in
              make_entry(entry.id).params.items()}
    return {"id": entry.id, "params": entry.params, "param_schema": schema,
            "class": entry.geom_class, "formula": entry.formula, "dist0": entry.dist0,
            "deriv0": entry.deriv0, "coeffs": list(coeffs)}


def cmd_catalog(args) -> int:
    entries = [_entry(args)] if args.entry else default_entries()
    records = [catalog_record(e) for e in entries]
    if args.format == "json":
        text = json.dumps(_jsonable(records), indent=2) + "\n"
    else:
        flat = [{"id": r["id"], "class": r["class"], "dist0": r["dist0"],
                 "params": json.dumps(_jsonable(r["params"])),
                 "coeffs": json.dumps(_jsonable(r["coeffs"]))} for r in records]
        text = render(flat, args.format)
    emit(text, args.out)
    return EXIT_OK


# parser

def _add_k(p):
    p.add_argument("--k", type=float, help="dilatation bound k in [0, 1]")
    p.add_argument("--K", type=_parse_K, help="quasiconformality constant K >= 1 (inf allowed)")


def _add_output(p, default_format):
    p.add_argument("--format", choices=("csv", "json", "table"), default=default_format)
    p.add_argument("--out", help="write to this path instead of stdout")


def _add_corpus(p, default_count):
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=default_count)
    p.add_argument("--order", type=int, help=f"truncation order (default ${ORDER_ENV} or {DEFAULT_ORDER})")
    p.add_argument("--r", type=float, help="radius to test instead of the default")
    p.add_argument("--entry", choices=ENTRY_IDS, help="use a single catalog fixture")
    p.add_argument("--param", action="append", metavar="KEY=VALUE", help="catalog parameter")
    p.add_argument("--lam", type=complex, default=1.0,
                   help="constant dilatation factor for fixtures (|lam| <= 1)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bohr", description="Bohr radii for quasiconformal harmonic maps")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="radius for one or all equations")
    p.add_argument("--eq", help=f"equation id: {', '.join(EQUATION_IDS)} or 'all'")
    p.add_argument("--all", action="store_true")
    _add_k(p)
    _add_output(p, "table")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("sweep", help="radius against K for every equation")
    p.add_argument("--eq", default="all")
    p.add_argument("--K-min", dest="K_min", type=_parse_K, default=1.0)
    p.add_argument("--K-max", dest="K_max", type=_parse_K, default=math.inf)
    p.add_argument("--steps", type=int, default=11)
    p.add_argument("--K-values", dest="K_values", help="explicit comma-separated K list, e.g. 1,3,inf")
    _add_output(p, "csv")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("verify", help="check a Bohr theorem on a fixture or fuzz corpus")
    p.add_argument("--theorem", required=True, help=f"one of {', '.join(corpus.THEOREMS)}")
    _add_k(p)
    _add_corpus(p, default_count=100)
    _add_output(p, "csv")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("conjecture", help="sample the conjectured sharp radii (exploratory)")
    p.add_argument("--part", required=True, choices=("convex", "univalent"))
    p.add_argument("--bins", type=int, default=10)
    _add_k(p)
    _add_corpus(p, default_count=100)
    _add_output(p, "json")
    p.set_defaults(func=cmd_conjecture)

    p = sub.add_parser("catalog", help="dump the test mappings")
    p.add_argument("--entry", choices=ENTRY_IDS)
    p.add_argument("--param", action="append", metavar="KEY=VALUE")
    _add_output(p, "json")
    p.set_defaults(func=cmd_catalog)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"bohr {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
