"""Command-line front end: ``hookcontent verify | suite | show``."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .corners import corner_profile, q_k
from .identities import (
    IDENTITIES,
    PARAMETERS,
    ConfigError,
    IdentityCheck,
    IdentityError,
    parse_config,
    parse_range,
    parse_tuple,
    render,
    run_identity,
    run_suite,
    DEFAULT_SETTINGS,
)
from .partitions import StrictPartition, boxes, count_ssyt, hook_product

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def shifted_table(lam: StrictPartition, values: list[int]) -> str:
    """Lay values out row-major on the shifted diagram, top row first."""
    width = max((len(str(v)) for v in values), default=1)
    lines = []
    it = iter(values)
    for i, part in enumerate(lam.parts):
        cells = [str(next(it)).rjust(width) for _ in range(part)]
        lines.append(" " * ((width + 1) * i) + " ".join(cells))
    return "\n".join(lines)


def show(lam: StrictPartition, what: str, kmax: int = 4) -> str:
    bx = boxes(lam)
    if what == "hooks":
        return shifted_table(lam, [b.hook for b in bx])
    if what == "contents":
        return shifted_table(lam, [b.content for b in bx])
    if what == "corners":
        prof = corner_profile(lam)
        return "\n".join(
            [
                f"outer corners: {' '.join(f'({r},{c})' for r, c in prof.outer_coords) or '-'}",
                f"inner corners: {' '.join(f'({r},{c})' for r, c in prof.inner_coords)}",
                f"x: {' '.join(map(str, prof.xs))}",
                f"y: {' '.join(map(str, prof.ys)) or '-'}",
            ]
        )
    if what == "q":
        lines = [f"q_{k} = {q_k(lam, k)}" for k in range(kmax + 1)]
        lines.append(f"|lambda| = {lam.size}  H = {hook_product(lam)}  f = {count_ssyt(lam)}")
        return "\n".join(lines)
    raise ValueError(f"unknown table {what!r}")


def _partition(text: str) -> StrictPartition:
    try:
        return StrictPartition.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _range(text: str) -> tuple[int, int]:
    try:
        return parse_range(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hookcontent", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="check one identity over a range of n")
    v.add_argument("--identity", required=True, choices=IDENTITIES)
    v.add_argument("--mu", type=_partition, default=StrictPartition(), help="e.g. 4,2,1 (default: empty)")
    v.add_argument("--k", type=int, default=None)
    v.add_argument("--n", type=_range, default=None, help="range A..B")
    v.add_argument("--r", default="1", help="poly-detect: power-sum exponents, e.g. 1,1")
    v.add_argument("--nu", default="-", help="poly-detect: partition nu for the q_nu factor")
    v.add_argument("--fit", type=int, default=None, help="poly-detect: fit on n = 0..FIT")
    v.add_argument("--format", choices=("text", "json", "csv"), default="text")
    v.add_argument("--timing", action="store_true")

    s = sub.add_parser("suite", help="run the configured identity suite")
    s.add_argument("--config", type=Path, default=None, help="key = value file (default: built-in ranges)")
    s.add_argument("--format", choices=("text", "json", "csv"), default="text")
    s.add_argument("--timing", action="store_true")

    w = sub.add_parser("show", help="print tables for one strict partition")
    w.add_argument("--lambda", dest="lam", type=_partition, required=True)
    w.add_argument("--what", choices=("hooks", "contents", "corners", "q"), default="hooks")
    w.add_argument("--k", type=int, default=4, help="largest k for --what q")
    return parser


def _verify_check(args: argparse.Namespace) -> IdentityCheck:
    name = args.identity
    allowed = PARAMETERS[name]
    if args.k is not None and "k" not in allowed:
        raise IdentityError(f"{name} takes no --k")
    if args.mu and "mu" not in allowed:
        raise IdentityError(f"{name} takes no --mu")
    n_min, n_max = args.n if args.n is not None else parse_range(DEFAULT_SETTINGS[name]["n"])
    kwargs = {}
    if "exponents" in allowed:
        kwargs["exponents"] = parse_tuple(args.r)
        kwargs["nu"] = parse_tuple(args.nu)
        if args.fit is not None:
            kwargs["fit_max"] = args.fit
    return IdentityCheck(name, n_min, n_max, mu=args.mu, k=args.k or 0, **kwargs)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK

    if args.command == "show":
        print(show(args.lam, args.what, args.k))
        return EXIT_OK

    try:
        if args.command == "verify":
            reports = [run_identity(_verify_check(args))]
        else:
            text = args.config.read_text() if args.config else ""
            reports, _ = run_suite(parse_config(text))
    except (IdentityError, ConfigError, ValueError, OSError) as exc:
        print(f"hookcontent: error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    sys.stdout.write(render(reports, args.format, args.timing))
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
