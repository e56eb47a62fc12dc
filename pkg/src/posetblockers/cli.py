"""Command-line interface.

Exit codes: 0 success, 1 parse error, 2 semantic input error,
3 property violation.
"""
from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from .antichains import enumerate_antichains
from .blockers import blocker, blocker_image, complementary, intersecters
from .clutter import clutter_blocker, format_clutter, parse_clutter
from .errors import OutOfEnvelope, ParseError, PosetError
from .formats import (
    antichain_lattice_dot,
    blocker_lattice_dot,
    format_antichain,
    parse_subset,
    poset_dot,
    read_poset,
)
from .generate import build_corpus
from .poset import cartesian_product, extremes, is_antichain, reduced_bounded_product
from .products import intersecters_full_product, intersecters_reduced_product
from .verify import FAULTS, run_all

EXIT_OK, EXIT_PARSE, EXIT_SEMANTIC, EXIT_VIOLATION = 0, 1, 2, 3


class CommandError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _load(path: str):
    try:
        return read_poset(path)
    except OSError as exc:
        raise CommandError(EXIT_PARSE, f"cannot read {path}: {exc.strerror}") from exc
    except PosetError as exc:
        raise CommandError(EXIT_PARSE, f"{path}: {exc}") from exc


def _antichain_arg(p, text: str) -> tuple:
    try:
        A = parse_subset(p, text)
    except PosetError as exc:
        raise CommandError(EXIT_SEMANTIC, str(exc)) from exc
    if not is_antichain(p, A):
        raise CommandError(EXIT_SEMANTIC, f"{text!r} is not an antichain")
    return tuple(sorted(A))


def _write(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def cmd_check(args, out) -> int:
    p = _load(args.file)
    print(f"elements: {p.n}", file=out)
    print(f"zero: {p.label(p.zero)}", file=out)
    print(f"one: {p.label(p.one)}", file=out)
    print(f"atoms: {format_antichain(p, p.atoms)}", file=out)
    print(f"antichains: {len(enumerate_antichains(p))}", file=out)
    if args.dot:
        _write(args.dot, poset_dot(p))
    return EXIT_OK


def cmd_blocker(args, out) -> int:
    p = _load(args.file)
    A = _antichain_arg(p, args.antichain)
    print(format_antichain(p, blocker(p, A)), file=out)
    return EXIT_OK


def cmd_complementary(args, out) -> int:
    p = _load(args.file)
    A = _antichain_arg(p, args.antichain)
    print(format_antichain(p, complementary(p, A)), file=out)
    return EXIT_OK


def cmd_image(args, out) -> int:
    p = _load(args.file)
    img = blocker_image(p)
    fmt = lambda A: format_antichain(p, A)  # noqa: E731
    print(f"antichains: {len(img.antichains)}", file=out)
    print(f"blockers: {len(img.blockers)}", file=out)
    print(f"atom: {' '.join(fmt(B) for B in img.atoms())}", file=out)
    print(f"coatom: {' '.join(fmt(B) for B in img.coatoms())}", file=out)
    for B in img.blockers:
        print(f"blocker {fmt(B)} preimage {len(img.preimages[B])}", file=out)
    if args.dot:
        _write(args.dot, blocker_lattice_dot(img))
    if args.ant_dot:
        _write(args.ant_dot, antichain_lattice_dot(p))
    return EXIT_OK


def cmd_product(args, out) -> int:
    p1, p2 = _load(args.file1), _load(args.file2)
    try:
        q = reduced_bounded_product(p1, p2) if args.mode == "reduced" else cartesian_product(p1, p2)
        A = parse_subset(q, args.subset)
        if args.mode == "reduced":
            inter, minimal = intersecters_reduced_product(p1, p2, A, q)
        else:
            inter = intersecters_full_product(p1, p2, A, q)
            minimal = extremes(q, inter, "min")
    except PosetError as exc:
        raise CommandError(EXIT_SEMANTIC, str(exc)) from exc
    direct = intersecters(q, A)
    print(f"intersecters: {format_antichain(q, inter)}", file=out)
    print(f"minimal: {format_antichain(q, minimal)}", file=out)
    agree = direct == inter and extremes(q, direct, "min") == tuple(minimal)
    print(f"direct: {'agree' if agree else 'DISAGREE ' + format_antichain(q, direct)}", file=out)
    return EXIT_OK if agree else EXIT_VIOLATION


def cmd_clutter_blocker(args, out) -> int:
    if args.ground < 0:
        raise CommandError(EXIT_SEMANTIC, "ground size must be nonnegative")
    try:
        G = parse_clutter(args.sets, args.ground)
    except ParseError as exc:
        raise CommandError(EXIT_PARSE, str(exc)) from exc
    print(format_clutter(clutter_blocker(G)), file=out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    if args.samples < 0:
        raise CommandError(EXIT_SEMANTIC, "samples must be nonnegative")
    try:
        corpus = build_corpus(seed=args.seed, samples=args.samples, max_size=args.max_size)
    except OutOfEnvelope as exc:
        raise CommandError(EXIT_SEMANTIC, str(exc)) from exc
    beta = FAULTS[args.inject_fault] if args.inject_fault else blocker
    results = run_all(corpus, beta=beta, stop_on_failure=True)
    print(f"corpus: {len(corpus.posets)} posets, {len(corpus.clutters)} clutters, "
          f"{len(corpus.maps)} maps (seed {corpus.seed})", file=out)
    for r in results:
        print(r.line(timing=args.timings), file=out)
    failures = [r for r in results if not r.passed]
    for r in failures:
        print(r.failure.describe(), file=out)
    print("all properties hold" if not failures else f"{len(failures)} suite(s) failed", file=out)
    return EXIT_VIOLATION if failures else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="posetblockers",
        description="Blockers of antichains in finite bounded posets.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="validate a poset file and summarize it")
    p.add_argument("file")
    p.add_argument("--dot", help="write the Hasse diagram of the poset as DOT")
    p.set_defaults(func=cmd_check)

    for name, func in (("blocker", cmd_blocker), ("complementary", cmd_complementary)):
        p = sub.add_parser(name, help=f"apply the {name} map to an antichain")
        p.add_argument("file")
        p.add_argument("--antichain", required=True, help="comma-separated labels, '-' for empty")
        p.set_defaults(func=func)

    p = sub.add_parser("image", help="lattice of blockers of a poset")
    p.add_argument("file")
    p.add_argument("--dot", help="write the Hasse diagram of the blocker lattice as DOT")
    p.add_argument("--ant-dot", help="write the Hasse diagram of the antichain lattice as DOT")
    p.set_defaults(func=cmd_image)

    p = sub.add_parser("product", help="intersecters in a product via the closed form")
    p.add_argument("file1")
    p.add_argument("file2")
    p.add_argument("--mode", choices=("full", "reduced"), required=True)
    p.add_argument("--subset", required=True, help="product elements such as '(m;a),(m;b)'")
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("clutter-blocker", help="blocker of a classical clutter")
    p.add_argument("--ground", type=int, required=True)
    p.add_argument("--sets", required=True, help="e.g. '1,2;3'; '-' empty clutter, '0' for {{}}")
    p.set_defaults(func=cmd_clutter_blocker)

    p = sub.add_parser("verify", help="run every property suite over a seeded corpus")
    p.add_argument("--max-size", type=int, default=6, help="max middle elements of random posets")
    p.add_argument("--samples", type=int, default=200, help="number of random posets")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--timings", action="store_true", help="append per-suite wall time")
    p.add_argument("--inject-fault", choices=sorted(FAULTS), help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except CommandError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
