"""Command-line front end: ``transpoly chord|ribbon|dm q ...`` and ``transpoly check ...``."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import List, Optional

from . import checks, chord, delta_matroid as dm, ribbon
from .chord import Convention

CHECKS = ("chord-4t", "corank", "dm-4t", "qdr", "vertex-count", "bc", "ribbon-4t", "all")


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="transpoly", description=__doc__)
    sub = parser.add_subparsers(dest="kind", required=True)

    p_chord = sub.add_parser("chord", help="chord diagrams")
    p_chord_sub = p_chord.add_subparsers(dest="action", required=True)
    p = p_chord_sub.add_parser("q", help="transition polynomial of a chord word")
    p.add_argument("word", help='double-occurrence word, e.g. "abab" or "a b a b"')
    p.add_argument("--convention", choices=[c.value for c in Convention], default="sec4")

    for kind, what in (("ribbon", "ribbon graph file"), ("dm", "delta-matroid file")):
        p_kind = sub.add_parser(kind, help=f"{what}s")
        kind_sub = p_kind.add_subparsers(dest="action", required=True)
        p = kind_sub.add_parser("q", help=f"transition polynomial of a {what}")
        p.add_argument("file", help=f"{what} ('-' for stdin)")

    p_check = sub.add_parser("check", help="run an exhaustive identity check")
    p_check.add_argument("which", choices=CHECKS)
    p_check.add_argument("--max-n", type=int, default=4, help=f"max chords (<= {checks.MAX_CHORDS})")
    p_check.add_argument("--max-edges", type=int, default=3, help=f"max ribbon edges (<= {checks.MAX_EDGES})")
    p_check.add_argument(
        "--input",
        help="check this file only: a delta-matroid for dm-4t, a ribbon graph for qdr",
    )
    p_check.add_argument(
        "--dm",
        help="with 'qdr --input R': compare Q of this delta-matroid file against Q(R) "
        "instead of Q(D(R))",
    )
    return parser


def _run_checks(args) -> List[checks.CheckResult]:
    which = args.which
    if args.input is not None:
        text = _read(args.input)
        if which == "dm-4t":
            return [checks.check_dm_4t_on([dm.parse(text)])]
        if which == "qdr":
            r = ribbon.parse(text)
            if args.dm is not None:
                return [checks.check_q_pair(dm.parse(_read(args.dm)), r)]
            return [checks.check_qdr(0, graphs=[r])]
        raise ValueError(f"--input is not supported by 'check {which}'")
    results = []
    if which in ("chord-4t", "all"):
        results.append(checks.check_chord_4t(args.max_n))
    if which in ("corank", "all"):
        results.append(checks.check_corank(args.max_n))
    if which in ("chord-4t", "corank"):
        return results
    graphs = checks.ribbon_instances(args.max_edges)
    ribbon_checks = (
        ("qdr", checks.check_qdr),
        ("dm-4t", checks.check_dm_4t),
        ("vertex-count", checks.check_vertex_count),
        ("bc", checks.check_bc),
        ("ribbon-4t", checks.check_ribbon_4t),
    )
    for name, fn in ribbon_checks:
        if which in (name, "all"):
            results.append(fn(args.max_edges, graphs=graphs))
    return results


def run(argv: Optional[List[str]] = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        if args.kind == "chord":
            poly = chord.q_chord(chord.parse(args.word), Convention(args.convention))
        elif args.kind == "ribbon":
            poly = ribbon.q_ribbon(ribbon.parse(_read(args.file)))
        elif args.kind == "dm":
            poly = dm.q_dm(dm.parse(_read(args.file)))
        else:
            results = _run_checks(args)
            for res in results:
                print(res.report(), file=out)
            return 0 if all(r.passed for r in results) else 1
    except (ValueError, OSError, KeyError) as exc:
        print(f"transpoly: error: {exc}", file=sys.stderr)
        return 2
    print(poly.to_text(), file=out)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
