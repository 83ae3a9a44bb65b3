"""Command-line front end.

Exit codes: 0 all verdicts confirmed, 2 some claim refuted, 3 some claim
unverified, 64 usage error, 65 construction or input error, 66 size cap.
"""

from __future__ import annotations

import argparse
import json
import sys
from itertools import product
from pathlib import Path
from typing import Sequence, TextIO

from . import io
from .analysis import DIM_CAP, REFUTED, UNVERIFIED, WEIGHT_BUDGET, claim_check, exact_distance, sweep, verify_distance_floor
from .builder import Family, build_code
from .errors import CapExceeded, EGQLDPCError, NotPrime, PairBudgetExceeded, UnsupportedGeometry
from .field import prime_power
from .geometry import EuclideanGeometry

EXIT_OK = 0
EXIT_REFUTED = 2
EXIT_UNVERIFIED = 3
EXIT_USAGE = 64
EXIT_CONSTRUCTION = 65
EXIT_SIZE = 66


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _prime_power_arg(text: str) -> int:
    try:
        q = int(text)
        prime_power(q)
    except (ValueError, NotPrime):
        raise argparse.ArgumentTypeError(f"{text!r} is not a prime power") from None
    return q


def _dimension_arg(text: str) -> int:
    try:
        m = int(text)
    except ValueError:
        m = 0
    if m < 2:
        raise argparse.ArgumentTypeError(f"m must be an integer >= 2, got {text!r}")
    return m


def _family_arg(text: str) -> Family:
    try:
        return Family(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"unknown family {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="egqldpc", description="Quantum LDPC codes from Euclidean geometry EG(m,q).")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def geometry_args(p):
        p.add_argument("--m", type=_dimension_arg, required=True)
        p.add_argument("--q", type=_prime_power_arg, required=True)

    def code_args(p):
        p.add_argument("--family", type=_family_arg, required=True, metavar="{h1,h2,parallel}")
        geometry_args(p)
        p.add_argument("--class", dest="class_index", type=int, default=None)

    p = sub.add_parser("geom", help="points, lines and parallel classes")
    geometry_args(p)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--stats", action="store_true")
    mode.add_argument("--list-lines", action="store_true")
    mode.add_argument("--list-classes", action="store_true")

    p = sub.add_parser("build", help="write core, H_orth and stabilizer matrices")
    code_args(p)
    p.add_argument("--out", type=Path, required=True)
    p.add_argument("--format", choices=["alist", "mtx", "json"], default="alist")
    p.add_argument("--exact-cap", type=int, default=DIM_CAP)
    p.add_argument("--budget", type=int, default=WEIGHT_BUDGET)

    p = sub.add_parser("check", help="adjudicate the claimed code parameters")
    code_args(p)
    p.add_argument("--exact-cap", type=int, default=DIM_CAP)
    p.add_argument("--budget", type=int, default=WEIGHT_BUDGET)

    p = sub.add_parser("distance", help="minimum distance of the kernel of an alist matrix")
    p.add_argument("--in", dest="path", type=Path, required=True)
    p.add_argument("--exact-cap", type=int, default=DIM_CAP)
    p.add_argument("--floor", type=int, default=None)
    p.add_argument("--budget", type=int, default=WEIGHT_BUDGET)

    p = sub.add_parser("sweep", help="claim-check a grid of families and (m, q)")
    p.add_argument("--config", type=Path, required=True)
    return parser


def _coords(c) -> str:
    return "(" + ",".join(map(str, c)) + ")"


def cmd_geom(args, out: TextIO) -> int:
    g = EuclideanGeometry.of(args.m, args.q)
    if args.list_lines:
        for ln in g.lines():
            pts = " ".join(_coords(g.point(i).coords) for i in ln.points)
            out.write(f"class={ln.class_id} base={_coords(ln.base.coords)} points={pts}\n")
    elif args.list_classes:
        for pc in g.parallel_classes():
            bases = " ".join(_coords(ln.base.coords) for ln in pc.lines)
            out.write(f"class={pc.class_id} direction={_coords(pc.direction)} lines={len(pc.lines)} bases={bases}\n")
    else:
        out.write(f"{g.stats()}\n")
    return EXIT_OK


def _verdict_exit(verdicts) -> int:
    if REFUTED in verdicts:
        return EXIT_REFUTED
    if UNVERIFIED in verdicts:
        return EXIT_UNVERIFIED
    return EXIT_OK


def cmd_check(args, out: TextIO) -> int:
    report = claim_check(args.family, args.m, args.q, args.class_index,
                         dim_cap=args.exact_cap, budget=args.budget)
    out.write(io.write_report(report))
    return _verdict_exit(report.verdicts.values())


def cmd_build(args, out: TextIO) -> int:
    code = build_code(args.family, args.m, args.q, args.class_index)
    report = claim_check(args.family, args.m, args.q, args.class_index,
                         dim_cap=args.exact_cap, budget=args.budget)
    meta = io.bundle_metadata(code, report)
    mats = {"core": code.core, "h_orth": code.h_orth, "stabilizer": code.stabilizer}
    args.out.mkdir(parents=True, exist_ok=True)
    written = []
    if args.format == "json":
        meta["matrices"] = {name: io.matrix_json(a) for name, a in mats.items()}
        path = args.out / "code.json"
        path.write_text(io.dumps(meta))
        written.append(path)
    else:
        writer = io.write_alist if args.format == "alist" else io.write_mtx
        meta["matrices"] = {}
        for name, a in mats.items():
            path = args.out / f"{name}.{args.format}"
            path.write_text(writer(a))
            meta["matrices"][name] = path.name
            written.append(path)
        path = args.out / "metadata.json"
        path.write_text(io.dumps(meta))
        written.append(path)
    for path in written:
        out.write(f"wrote {path}\n")
    return EXIT_OK


def cmd_distance(args, out: TextIO) -> int:
    h = io.parse_alist(args.path.read_text())
    if args.floor is not None:
        result = verify_distance_floor(h, args.floor, args.budget)
    else:
        result = exact_distance(h, args.exact_cap)
    out.write(io.write_distance(result))
    return EXIT_OK


def _load_sweep_config(path: Path):
    cfg = json.loads(path.read_text())
    families = [Family(f) for f in cfg.get("families", [f.value for f in Family])]
    if "cases" in cfg:
        cases = [tuple(c) for c in cfg["cases"]]
    else:
        cases = list(product(cfg["m"], cfg["q"]))
    return families, cases, cfg.get("exact_cap", DIM_CAP), cfg.get("budget", WEIGHT_BUDGET)


def cmd_sweep(args, out: TextIO) -> int:
    try:
        families, cases, cap, budget = _load_sweep_config(args.config)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"bad sweep config: {exc}") from None
    result = sweep(families, cases, dim_cap=cap, budget=budget)
    verdicts = []
    for entry in result.entries:
        out.write("---\n")
        if entry.report is not None:
            out.write(io.write_report(entry.report))
            verdicts.extend(entry.report.verdicts.values())
        else:
            cls = "" if entry.class_index is None else f" class_index={entry.class_index}"
            out.write(f"family={entry.family.value} m={entry.m} q={entry.q}{cls} error={entry.error}\n")
    out.write("---\n")
    for (m, q), ok in sorted(result.class_consistency.items()):
        out.write(f"class_consistency.m{m}.q{q}={'true' if ok else 'false'}\n")
    return _verdict_exit(verdicts)


COMMANDS = {"geom": cmd_geom, "build": cmd_build, "check": cmd_check, "distance": cmd_distance, "sweep": cmd_sweep}


def run(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except (UnsupportedGeometry, CapExceeded, PairBudgetExceeded) as exc:
        err.write(f"{type(exc).__name__}: {exc}\n")
        return EXIT_SIZE
    except (EGQLDPCError, OSError) as exc:
        err.write(f"{type(exc).__name__}: {exc}\n")
        return EXIT_CONSTRUCTION


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
