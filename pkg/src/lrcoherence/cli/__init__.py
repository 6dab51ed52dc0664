"""
Command-line interface.

Exit codes: 0 success, 2 invalid arguments, 3 resource cap exceeded, 4 I/O error.
"""

from __future__ import annotations

import argparse
import sys

from ..errors import ContractError, ResourceLimitError
from ..spectrum import DEFAULT_BINS
from .reproduce import FIGURES, reproduce
from .runner import run, scan_alpha
from .scenario import OUTPUT_KINDS, Scenario, load_scenario_file

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_RESOURCE = 3
EXIT_IO = 4


def _add_scenario_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--config", help="key=value scenario file; flags override its values")
    p.add_argument("--n", type=int, help="number of spins (default 20)")
    p.add_argument("--j", type=float, help="base coupling J (default 1)")
    p.add_argument("--alpha", type=float, help="power-law exponent (default 3)")
    p.add_argument("--range", help="truncation range: 1|2|3|...|exact (default exact)")
    p.add_argument("--spin", type=int, help="target spin, 1-based (default n//2)")
    p.add_argument("--block-start", type=int, help="first spin of the inside block")
    p.add_argument("--block-size", type=int, help="block size N_I; selects block coherence")
    p.add_argument("--t-max", type=float, help="end of the time grid in units of 1/J (default 10)")
    p.add_argument("--steps", type=int, help="number of grid points (default 1000)")
    p.add_argument("--normalize", action="store_const", const=True, help="divide by C(0)")
    p.add_argument("--method", choices=("factorized", "brute"), help="evaluation path")
    p.add_argument("--bins", type=int, help=f"histogram bins (default {DEFAULT_BINS})")
    p.add_argument("--histogram-norm", choices=("unit-sum", "unit-max"))
    p.add_argument("--outputs", help=f"comma list from {','.join(OUTPUT_KINDS)}")
    p.add_argument("--out", help="output directory (default ./out)")
    p.add_argument("--svg", action="store_const", const=True, help="also write SVG plots")


_SCENARIO_KEYS = ("n", "j", "alpha", "range", "spin", "block_start", "block_size", "t_max", "steps",
                  "normalize", "method", "bins", "histogram_norm", "outputs", "out", "svg")


def _scenario(args) -> Scenario:
    base = Scenario()
    if args.config:
        base = base.merged(load_scenario_file(args.config))
    return base.merged({k: getattr(args, k) for k in _SCENARIO_KEYS})


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lrcoherence",
        description="Coherence relaxation of the long-range Ising chain after a quench.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="evaluate one scenario")
    _add_scenario_flags(p_run)

    p_scan = sub.add_parser("scan-alpha", help="one series per exponent plus a relaxation summary")
    _add_scenario_flags(p_scan)
    p_scan.add_argument("--alphas", required=True, help="comma list, e.g. 3,2,1")

    p_rep = sub.add_parser("reproduce", help="regenerate the data behind a figure")
    p_rep.add_argument("figure", choices=FIGURES + ("all",))
    p_rep.add_argument("--out", default="out")
    p_rep.add_argument("--steps", type=int, help="override the figure's default grid size")
    p_rep.add_argument("--bins", type=int, default=DEFAULT_BINS)
    p_rep.add_argument("--svg", action="store_true")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "run":
            run(_scenario(args))
        elif args.command == "scan-alpha":
            try:
                alphas = [float(a) for a in args.alphas.split(",") if a.strip()]
            except ValueError:
                raise ContractError(f"bad --alphas list {args.alphas!r}") from None
            scan_alpha(_scenario(args), alphas)
        else:
            reproduce(args.figure, args.out, args.steps, args.bins, args.svg)
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except ContractError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        where = f" ({exc.filename})" if exc.filename else ""
        print(f"error: {exc.strerror or exc}{where}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
