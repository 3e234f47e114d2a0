"""Command-line front end for the parameter pipeline.

Subcommands: params (full table), ideal (print a vanishing-ideal basis),
torus (closed-form table, optional pipeline cross-check), verify (run all
cross-module invariants).  Exit codes: 0 ok, 1 usage, 2 resource limit,
3 internal inconsistency.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from .codes import (
    DEFAULT_MD_BUDGET,
    CodeParameters,
    MinDistance,
    parameter_table,
    torus_dimension,
    torus_min_distance,
    verify_instance,
)
from .errors import DomainError, InternalInconsistencyError, ResourceLimitError
from .gf import FieldSpec
from .ideals import (
    ExponentMatrix,
    enumerate_points,
    vanishing_ideal_affine,
    vanishing_ideal_projective,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_RESOURCE = 2
EXIT_INCONSISTENT = 3


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    q: int
    modulus: Optional[list[int]]
    matrix: ExponentMatrix
    degrees: list[int]
    md_budget: int = DEFAULT_MD_BUDGET
    output_format: str = "table"
    verify: bool = False
    threads: int = 1

    def field(self) -> FieldSpec:
        return FieldSpec.of(self.q, self.modulus)


# -- config parsing ------------------------------------------------------------

def parse_degrees(text: str) -> list[int]:
    text = text.strip()
    if ".." in text:
        lo_text, hi_text = text.split("..", 1)
        lo, hi = int(lo_text), int(hi_text)
    else:
        lo = hi = int(text)
    if lo < 0 or hi < lo:
        raise UsageError(f"bad degree range {text!r}: need 0 <= min <= max")
    return list(range(lo, hi + 1))


def parse_matrix_flag(text: str) -> list[list[int]]:
    rows = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if chunk:
            rows.append([int(e) for e in chunk.replace(",", " ").split()])
    if not rows:
        raise UsageError("empty matrix")
    return rows


def parse_config_file(path: str) -> dict:
    """Flat key-value lines; 'matrix' repeats, one row per line."""
    values: dict = {"matrix": []}
    try:
        with open(path, encoding="utf-8") as handle:
            lines = handle.readlines()
    except OSError as exc:
        raise UsageError(f"cannot read config {path}: {exc}") from exc
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" in line:
            key, _, rest = line.partition("=")
        else:
            key, _, rest = line.partition(" ")
        key, rest = key.strip(), rest.strip()
        if not rest:
            raise UsageError(f"{path}:{lineno}: key {key!r} has no value")
        try:
            if key == "q":
                values["q"] = int(rest)
            elif key == "modulus":
                values["modulus"] = [int(c) for c in rest.replace(",", " ").split()]
            elif key == "matrix":
                values["matrix"].append([int(c) for c in rest.replace(",", " ").split()])
            elif key == "degrees":
                values["degrees"] = parse_degrees(rest)
            elif key == "md-budget":
                values["md_budget"] = int(rest)
            elif key == "format":
                values["output_format"] = rest
            elif key == "threads":
                values["threads"] = int(rest)
            else:
                raise UsageError(f"{path}:{lineno}: unknown key {key!r}")
        except ValueError as exc:
            raise UsageError(f"{path}:{lineno}: {exc}") from exc
    if not values["matrix"]:
        del values["matrix"]
    return values


def build_config(args, need_degrees: bool) -> RunConfig:
    """Merge config file and flags; flags win."""
    values: dict = {}
    if getattr(args, "config", None):
        values = parse_config_file(args.config)
    if getattr(args, "q", None) is not None:
        values["q"] = args.q
    if getattr(args, "modulus", None) is not None:
        values["modulus"] = [int(c) for c in args.modulus.replace(",", " ").split()]
    if getattr(args, "matrix", None) is not None:
        values["matrix"] = parse_matrix_flag(args.matrix)
    if getattr(args, "degrees", None) is not None:
        values["degrees"] = parse_degrees(args.degrees)
    if getattr(args, "md_budget", None) is not None:
        values["md_budget"] = args.md_budget
    if getattr(args, "format", None) is not None:
        values["output_format"] = args.format
    if getattr(args, "threads", None) is not None:
        values["threads"] = args.threads

    if "q" not in values:
        raise UsageError("missing field order: give --q or a config with q")
    if "matrix" not in values:
        raise UsageError("missing exponent matrix: give --matrix or config rows")
    if need_degrees and "degrees" not in values:
        raise UsageError("missing --degrees (inclusive, e.g. 1..5)")
    try:
        matrix = ExponentMatrix.of(values["matrix"])
    except DomainError as exc:
        raise UsageError(str(exc)) from exc
    fmt = values.get("output_format", "table")
    if fmt not in ("table", "csv", "json"):
        raise UsageError(f"unknown format {fmt!r}: pick table, csv or json")
    md_budget = values.get("md_budget", DEFAULT_MD_BUDGET)
    if md_budget < 0:
        raise UsageError("md-budget must be >= 0")
    threads = values.get("threads", 1)
    if threads < 1:
        raise UsageError("threads must be >= 1")
    return RunConfig(
        q=values["q"],
        modulus=values.get("modulus"),
        matrix=matrix,
        degrees=values.get("degrees", []),
        md_budget=md_budget,
        output_format=fmt,
        verify=bool(getattr(args, "verify", False)),
        threads=threads,
    )


# -- output rendering ------------------------------------------------------------

_COLUMNS = ("d", "length", "dim", "delta", "delta_status",
            "singleton_defect", "mds")


def _row_cells(p: CodeParameters) -> list[str]:
    defect = p.singleton_defect
    mds = p.mds
    return [
        str(p.d), str(p.length), str(p.dimension), str(p.min_distance),
        p.min_distance.status,
        "" if defect is None else str(defect),
        "" if mds is None else ("true" if mds else "false"),
    ]


def render_rows(rows: Sequence[CodeParameters], fmt: str) -> str:
    if fmt == "csv":
        lines = [",".join(_COLUMNS)]
        lines += [",".join(_row_cells(p)) for p in rows]
        return "\n".join(lines)
    if fmt == "json":
        payload = []
        for p in rows:
            md = p.min_distance
            delta = md.exact_value
            if md.status == "bounded":
                delta = {"lower": md.lower, "upper": md.upper}
            payload.append({
                "d": p.d,
                "length": p.length,
                "dim": p.dimension,
                "delta": delta,
                "delta_status": md.status,
                "singleton_defect": p.singleton_defect,
                "mds": p.mds,
            })
        return json.dumps(payload, indent=2)
    # plain aligned table
    cells = [list(_COLUMNS)] + [_row_cells(p) for p in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(_COLUMNS))]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip()
             for row in cells]
    return "\n".join(lines)


# -- subcommands ------------------------------------------------------------------

def cmd_params(args) -> int:
    config = build_config(args, need_degrees=True)
    pset = enumerate_points(config.matrix, config.field())
    rows = parameter_table(pset, config.degrees, md_budget=config.md_budget,
                           verify=config.verify, threads=config.threads)
    print(render_rows(rows, config.output_format))
    return EXIT_OK


def cmd_ideal(args) -> int:
    config = build_config(args, need_degrees=False)
    pset = enumerate_points(config.matrix, config.field())
    gb = vanishing_ideal_affine(pset)
    if args.which == "y":
        gb = vanishing_ideal_projective(gb, verify=config.verify)
    key = gb.order.key
    for g in sorted(gb.generators, key=lambda p: key(p.leading_monomial(gb.order))):
        print(g.format(gb.order))
    return EXIT_OK


def cmd_torus(args) -> int:
    if args.q < 3:
        raise UsageError("torus tables need q >= 3 (q = 2 is a single point)")
    if args.s < 1:
        raise UsageError("torus dimension s must be >= 1")
    degrees = parse_degrees(args.degrees) if args.degrees else []
    length = (args.q - 1) ** args.s
    rows = []
    for d in degrees:
        dim = torus_dimension(args.q, args.s, d)
        delta = (torus_min_distance(args.q, args.s, d) if d >= 1 else length)
        rows.append(CodeParameters(d, length, dim, MinDistance.exact(delta)))
    print(render_rows(rows, args.format or "table"))
    if args.cross_check and degrees:
        matrix = ExponentMatrix.torus(args.s)
        field = FieldSpec.of(args.q)
        pset = enumerate_points(matrix, field)
        pipeline = parameter_table(pset, degrees, md_budget=args.md_budget,
                                   threads=args.threads or 1)
        problems = []
        if len(pset) != length:
            problems.append(f"length {len(pset)} != {length}")
        for want, got in zip(rows, pipeline):
            if want.dimension != got.dimension:
                problems.append(
                    f"d={want.d}: dim {got.dimension} != {want.dimension}")
            exact = got.min_distance.exact_value
            if exact is not None and exact != want.min_distance.value:
                problems.append(
                    f"d={want.d}: delta {exact} != {want.min_distance.value}")
        if problems:
            for p in problems:
                print(f"cross-check FAIL: {p}", file=sys.stderr)
            return EXIT_INCONSISTENT
        print(f"cross-check ok: pipeline agrees on {len(degrees)} degrees")
    return EXIT_OK


def cmd_verify(args) -> int:
    config = build_config(args, need_degrees=True)
    pset = enumerate_points(config.matrix, config.field())
    checks = verify_instance(pset, config.degrees, md_budget=config.md_budget,
                             threads=config.threads)
    failed = [name for name, ok, _ in checks if not ok]
    for name, ok, detail in checks:
        mark = "ok  " if ok else "FAIL"
        print(f"{mark} {name}: {detail}")
    if failed:
        print(f"{len(failed)} of {len(checks)} checks failed", file=sys.stderr)
        return EXIT_INCONSISTENT
    print(f"all {len(checks)} checks passed")
    return EXIT_OK


# -- entry point --------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_common(sub, degrees_required: bool):
    sub.add_argument("--config", help="key-value config file (flags win)")
    sub.add_argument("--q", type=int, help="field order (prime power)")
    sub.add_argument("--modulus",
                     help="extension-field modulus coefficients, constant first")
    sub.add_argument("--matrix",
                     help="exponent rows, ';'-separated: '1 1 0; 0 1 1; 1 0 1'")
    sub.add_argument("--degrees", help="inclusive degree range, e.g. 1..5")
    sub.add_argument("--md-budget", type=int, dest="md_budget",
                     help="codeword budget for exact minimum distance")
    sub.add_argument("--format", choices=("table", "csv", "json"))
    sub.add_argument("--threads", type=int)
    sub.add_argument("--verify", action="store_true",
                     help="enable all cross-checks")


def make_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="paramcodes",
                     description="Parameters of parameterized affine codes "
                                 "over finite fields")
    commands = parser.add_subparsers(dest="command", required=True)

    p = commands.add_parser("params", parents=[], help="full parameter table")
    _add_common(p, degrees_required=True)
    p.set_defaults(handler=cmd_params)

    p = commands.add_parser("ideal", help="print a vanishing-ideal basis")
    p.add_argument("which", choices=("xstar", "y"))
    _add_common(p, degrees_required=False)
    p.set_defaults(handler=cmd_ideal)

    p = commands.add_parser("torus", help="closed-form torus table")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--degrees", required=True)
    p.add_argument("--format", choices=("table", "csv", "json"))
    p.add_argument("--md-budget", type=int, dest="md_budget",
                   default=DEFAULT_MD_BUDGET)
    p.add_argument("--threads", type=int)
    p.add_argument("--cross-check", action="store_true", dest="cross_check",
                   help="run the full pipeline and diff")
    p.set_defaults(handler=cmd_torus)

    p = commands.add_parser("verify", help="run all cross-module invariants")
    _add_common(p, degrees_required=True)
    p.set_defaults(handler=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except UsageError as exc:
        print(f"paramcodes: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"paramcodes: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimitError as exc:
        print(f"paramcodes: resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except InternalInconsistencyError as exc:
        print(f"paramcodes: INTERNAL INCONSISTENCY: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT


if __name__ == "__main__":
    sys.exit(main())
