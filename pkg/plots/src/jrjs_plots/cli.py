"""Command-line entry point: `jrjs-plots --csv FILE --out DIR`."""

from __future__ import annotations

import argparse
import sys

from .reader import SchemaError
from .render import render


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jrjs-plots",
        description="Render simulator result CSVs into line charts with error bands.",
    )
    parser.add_argument("--csv", required=True, metavar="FILE", help="input result CSV")
    parser.add_argument("--out", required=True, metavar="DIR", help="output directory")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        written = render(args.csv, args.out)
    except SchemaError as exc:
        print(f"jrjs-plots: config error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"jrjs-plots: i/o error on {args.csv}: {exc}", file=sys.stderr)
        return 3
    print(f"wrote {len(written)} figures to {args.out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
