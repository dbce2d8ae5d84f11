"""Command-line entry point: ``solfdtd <run|sweep|convergence|field> --config PATH [--out DIR]``."""

from __future__ import annotations

import argparse
import logging
import sys

from .config import parse_config
from .errors import DomainError, IoError, NumericsError, ParseError, ValidationError
from .experiments import COMMANDS, execute

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_NUMERICS = 2


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="solfdtd", description="G-FDTD bright soliton propagation")
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("--config", help="config file (section.key = value lines); defaults if omitted")
    ap.add_argument("--out", help="output directory, overrides run.output_dir")
    ap.add_argument("--jobs", type=int, default=1, help="parallel workers for sweep")
    ap.add_argument("-v", "--verbose", action="store_true")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        text = ""
        if args.config:
            try:
                with open(args.config, encoding="utf-8") as fh:
                    text = fh.read()
            except OSError as exc:
                raise IoError(f"cannot read config {args.config}: {exc}") from exc
        cfg = parse_config(text)
        report = execute(cfg, args.command, args.out, jobs=args.jobs)
    except NumericsError as exc:
        print(f"solfdtd: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICS
    except (ParseError, ValidationError, DomainError, IoError) as exc:
        print(f"solfdtd: {exc}", file=sys.stderr)
        return EXIT_INVALID
    print(f"{report.command}: wrote {len(report.files)} files to {report.output_dir}")
    for key, value in report.summary.items():
        if key != "rows":
            print(f"  {key}: {value}")
    if "rows" in report.summary:
        for r in report.summary["rows"]:
            print(f"  n_y={r['n_y']:4d} M={r['m_terms']} linf={r['linf']:.3e} order={r['order']:.3f} {r['status']}")
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
