"""Command-line entry point: ``python -m twocolored <subcommand> ...``.

Exit status is 0 on success, 1 when a verification fails and 2 on usage
errors.  Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
import tempfile
from dataclasses import dataclass
from pathlib import Path

from . import bipartition as bp
from . import verify as vf
from .colored_partitions import count_odd_overpartitions, counts, enumerate_E, iter_odd_overpartitions
from .franklin import classify_staircase, double_parts, franklin_step_even, halve_even, orbit, staircase
from .partition_core import CountTable, p_table
from .qseries import E_series, overline_po_series, signed_difference_series

log = logging.getLogger("twocolored")

CACHE_ENV = "TWOCOLORED_CACHE_DIR"
CACHE_NAME = "ptable.txt"


class UsageError(Exception):
    pass


@dataclass
class CliConfig:
    max_n: int = 60
    method: str = "enumeration"
    format: str = "text"
    cache_path: Path | None = None
    parallelism: int = os.cpu_count() or 1


def resolve_cache_path(flag: str | None) -> Path | None:
    if flag:
        return Path(flag)
    directory = os.environ.get(CACHE_ENV)
    if directory:
        return Path(directory) / CACHE_NAME
    return None


def _write_atomic(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=".ptable-")
    try:
        with os.fdopen(fd, "w", encoding="ascii") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        Path(tmp).unlink(missing_ok=True)
        raise


def load_or_build_ptable(cfg: CliConfig) -> CountTable:
    """Serve p(0..max_n) from the cache when it is valid, else rebuild it."""
    path = cfg.cache_path
    if path is not None and path.exists():
        try:
            table = CountTable.load(path)
        except (OSError, ValueError) as exc:
            log.warning("ignoring corrupt p-table cache %s: %s", path, exc)
        else:
            if table.N >= cfg.max_n:
                return table
    table = p_table(cfg.max_n)
    if path is not None:
        try:
            _write_atomic(path, table.to_text())
        except OSError as exc:
            log.warning("cannot write p-table cache %s (%s); keeping it in memory", path, exc)
    return table


def parse_parts(text: str, what: str = "partition") -> tuple[int, ...]:
    """``"9,5,3,1"`` -> ``(9, 5, 3, 1)``; the empty string is the empty partition."""
    text = text.strip()
    if not text:
        return ()
    try:
        parts = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise UsageError(f"malformed {what} literal {text!r}") from None
    if any(p < 1 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
        raise UsageError(f"{what} must be positive integers in descending order: {text!r}")
    return parts


def _emit_json(obj) -> None:
    print(json.dumps(obj))


def cmd_count(args, cfg: CliConfig) -> int:
    n = args.n
    if n < 0:
        raise UsageError("--n must be nonnegative")
    method = args.method or ("enumeration" if n <= vf.ENUMERATION_CAP else "series")
    if method == "enumeration":
        if n > vf.ENUMERATION_CAP:
            raise UsageError(f"enumeration is capped at n <= {vf.ENUMERATION_CAP}")
        E, E0, E1, E2, E3 = counts(n)
        po = count_odd_overpartitions(n)
    else:
        if n > vf.SERIES_CAP:
            raise UsageError(f"series counts are capped at n <= {vf.SERIES_CAP}")
        E = E_series(n)[n]
        A = signed_difference_series("even_parts", n)[n]
        B = signed_difference_series("all_parts", n)[n]
        E0, E2 = (E + A) // 2, (E + B) // 2
        E1, E3 = E - E0, E - E2
        po = overline_po_series(n)[n]
    values = {"E": E, "E0": E0, "E1": E1, "E2": E2, "E3": E3, "po": po}
    if cfg.format == "json":
        _emit_json({"n": n, **{k: str(v) for k, v in values.items()}})
    elif cfg.format == "csv":
        print("n," + ",".join(values))
        print(f"{n}," + ",".join(str(v) for v in values.values()))
    else:
        print(", ".join(f"{k}={v}" for k, v in values.items()))
    return 0


def cmd_enumerate(args, cfg: CliConfig) -> int:
    n = args.n
    if not 0 <= n <= vf.ENUMERATION_CAP:
        raise UsageError(f"--n must lie in [0, {vf.ENUMERATION_CAP}]")
    if args.kind == "E":
        for p in enumerate_E(n):
            _emit_json({"parts": p.to_json()})
    else:
        for o in iter_odd_overpartitions(n):
            _emit_json(o.to_json())
    return 0


SERIES = {
    "E": E_series,
    "po": overline_po_series,
    "e0-e1": lambda N: signed_difference_series("even_parts", N),
    "e2-e3": lambda N: signed_difference_series("all_parts", N),
}


def cmd_series(args, cfg: CliConfig) -> int:
    N = args.max_n if args.max_n is not None else vf.SERIES_CAP
    if not 0 <= N <= vf.SERIES_CAP:
        raise UsageError(f"--max-n must lie in [0, {vf.SERIES_CAP}]")
    coeffs = SERIES[args.name](N).coeffs
    if cfg.format == "json":
        _emit_json([str(c) for c in coeffs])
    elif cfg.format == "csv":
        print("n,coeff")
        for n, c in enumerate(coeffs):
            print(f"{n},{c}")
    else:
        for n, c in enumerate(coeffs):
            print(f"{n} {c}")
    return 0


def cmd_franklin(args, cfg: CliConfig) -> int:
    evens = parse_parts(args.even, "even partition")
    try:
        mu = halve_even(evens)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if not mu:
        # the empty even part set is the m = 0 pentagonal term
        _emit_json({"case": "fixed", "fixed": {"m": 0, "sign": None}})
        return 0
    out = franklin_step_even(evens)
    if not args.orbit:
        _emit_json(out.to_json())
        return 0
    if out.kind == "fixed":
        m, sign = classify_staircase(mu)
        _emit_json({
            "case": "fixed",
            "fixed": {"m": m, "sign": sign},
            "staircase": list(double_parts(staircase(m, sign))),
            "even_sum": sum(evens),
        })
    else:
        _emit_json({"case": out.applied_case, "orbit": [list(double_parts(p)) for p in orbit(mu)]})
    return 0


def cmd_bipartition(args, cfg: CliConfig) -> int:
    if args.invert is not None:
        if args.beta is not None or args.alpha is not None:
            raise UsageError("--invert cannot be combined with --beta/--alpha")
        c_text, mu_text = args.invert
        try:
            c = int(c_text)
        except ValueError:
            raise UsageError(f"malformed c {c_text!r}") from None
        if c < 0:
            raise UsageError("c must be nonnegative")
        mu = parse_parts(mu_text, "residual partition")
        orientation = "swapped" if args.swapped else "normal"
        try:
            sys_ = bp.residual_to_system(c, mu, orientation)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        d, t = bp.d_and_t(sys_)
        result = {
            "L": list(sys_.L), "R": list(sys_.R), "c": sys_.c, "orientation": sys_.orientation,
            "beta_odd": list(sys_.beta_odd), "alpha_odd": list(sys_.alpha_odd), "d": d, "t": t,
        }
        if cfg.format == "json":
            _emit_json(result)
        else:
            for key, value in result.items():
                print(f"{key}: {value}")
        return 0
    if args.beta is None and args.alpha is None:
        raise UsageError("bipartition needs --beta/--alpha or --invert C MU")
    beta = parse_parts(args.beta or "", "--beta")
    alpha = parse_parts(args.alpha or "", "--alpha")
    try:
        sys_ = bp.build_system(beta, alpha)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    d, t = bp.d_and_t(sys_)
    dia = bp.to_diagram(sys_)
    _, residual = bp.diagram_to_residual(dia)
    result = {"c": sys_.c, "d": d, "t": t, "rows": list(dia.rows), "residual": list(residual)}
    if cfg.format == "json":
        _emit_json(result)
    else:
        for key, value in result.items():
            print(f"{key}: {value}")
        print(f"orientation: {sys_.orientation}")
        print(bp.render(sys_))
    return 0


def cmd_verify(args, cfg: CliConfig) -> int:
    theorem = args.theorem
    method = args.method or "enumeration"
    try:
        if theorem in ("thmE", "thmQ"):
            default = vf.ENUMERATION_CAP if method != "series" else vf.SERIES_CAP
            n_max = args.max_n if args.max_n is not None else default
            fn = vf.verify_theorem_E if theorem == "thmE" else vf.verify_theorem_Q
            report = fn(n_max, method, jobs=cfg.parallelism)
        elif theorem == "franklin":
            report = vf.verify_franklin(args.max_n if args.max_n is not None else 40)
        elif theorem == "bijection":
            d_max = args.max_n if args.max_n is not None else 25
            cfg.max_n = max(d_max, 1)
            report = vf.verify_bijection(args.max_c, d_max, table=load_or_build_ptable(cfg))
        elif theorem == "euler":
            n_max = args.max_n if args.max_n is not None else 500
            cfg.max_n = n_max
            report = vf.verify_euler(n_max, table=load_or_build_ptable(cfg))
        else:
            report = vf.cross_check(args.max_n if args.max_n is not None else 40)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if cfg.format == "json":
        print(report.to_json(include_elapsed=False))
    else:
        print(vf.format_table([report]))
    return 0 if report.passed else 1


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    # global flags are accepted before or after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json", "csv"], default=argparse.SUPPRESS)
    common.add_argument("--cache", default=argparse.SUPPRESS, help="p-table cache file")
    common.add_argument("--jobs", type=_positive, default=argparse.SUPPRESS)

    # parents share action objects, so defaults are filled in by run(), not set_defaults
    parser = argparse.ArgumentParser(prog="twocolored", parents=[common])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[common], help="E, E0..E3 and po for one n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=["enumeration", "series"])
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("enumerate", parents=[common], help="list partitions as JSON lines")
    p.add_argument("kind", choices=["E", "po"])
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("series", parents=[common], help="generating-function coefficients")
    p.add_argument("name", choices=sorted(SERIES))
    p.add_argument("--max-n", type=int)
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("franklin", parents=[common], help="apply the involution to even parts")
    p.add_argument("--even", required=True, help="e.g. 10,8,4,2")
    p.add_argument("--orbit", action="store_true")
    p.set_defaults(func=cmd_franklin)

    p = sub.add_parser("bipartition", parents=[common], help="concatenation diagram of a system")
    p.add_argument("--beta", help="blue odd parts, e.g. 9,5,3,1")
    p.add_argument("--alpha", help="green odd parts, e.g. 7,1")
    p.add_argument("--invert", nargs=2, metavar=("C", "MU"))
    p.add_argument("--swapped", action="store_true", help="with --invert: blue parts are on R")
    p.set_defaults(func=cmd_bipartition)

    p = sub.add_parser("verify", parents=[common], help="run a verification sweep")
    p.add_argument("theorem", choices=["thmE", "thmQ", "franklin", "bijection", "crosscheck", "euler"])
    p.add_argument("--max-n", type=int)
    p.add_argument("--max-c", type=int, default=5, help="bijection grid bound on c")
    p.add_argument("--method", choices=["enumeration", "series", "both"])
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    cfg = CliConfig(
        max_n=60,
        method=getattr(args, "method", None) or "enumeration",
        format=getattr(args, "format", "text"),
        cache_path=resolve_cache_path(getattr(args, "cache", None)),
        parallelism=getattr(args, "jobs", os.cpu_count() or 1),
    )
    try:
        return args.func(args, cfg)
    except UsageError as exc:
        print(f"twocolored: error: {exc}", file=sys.stderr)
        return 2


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(name)s: %(levelname)s: %(message)s")
    return run(sys.argv[1:] if argv is None else argv)
