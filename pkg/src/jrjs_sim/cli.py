"""Command-line entry point: `jrjs-sim run --experiment <name> ...`."""

from __future__ import annotations

import argparse
import sys

from . import harness
from .harness import ConfigError


def _int_list(text: str):
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError(f"expected an integer or comma list, got {text!r}")


def _power_values(text: str):
    """A single dBm value, or an inclusive lo:hi:step range."""
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise ValueError(f"range must be lo:hi:step, got {text!r}")
        lo, hi, step = (float(p) for p in parts)
        if step <= 0.0 or hi < lo:
            raise ValueError(f"range {text!r} must have step > 0 and hi >= lo")
        vals = []
        k = 0
        while True:
            v = lo + k * step
            if v > hi + 1e-9 * max(1.0, abs(hi)):
                break
            vals.append(v)
            k += 1
        return tuple(vals)
    return (float(text),)


def _rd_values(text: str):
    if text == "auto":
        return "auto"
    return tuple(float(part) for part in text.split(","))


def _scheme_list(text: str):
    return tuple(part.strip() for part in text.split(",") if part.strip())


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jrjs-sim",
        description="Secrecy-rate Monte-Carlo experiments for relay selection with "
        "null-steered cooperative jamming.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    run_p = sub.add_parser("run", help="run one experiment and write its CSV")
    run_p.add_argument("--experiment", required=True, choices=harness.EXPERIMENTS)
    run_p.add_argument("--trials", type=int, default=None, help="Monte-Carlo trials per sweep point")
    run_p.add_argument("--m", type=_int_list, default=None, metavar="INT[,INT...]",
                       help="node count, or comma list for m sweeps")
    run_p.add_argument("--p-dbm", dest="p_dbm", type=_power_values, default=None,
                       metavar="VAL|LO:HI:STEP", help="total power in dBm")
    run_p.add_argument("--rd", type=_rd_values, default=None, metavar="VAL[,VAL...]|auto",
                       help="decode target in bit/s/Hz; 'auto' follows the power schedule")
    run_p.add_argument("--schemes", type=_scheme_list, default=None, metavar="LABEL[,LABEL...]")
    run_p.add_argument("--seed", type=int, default=None)
    run_p.add_argument("--out", dest="out_path", default=None, metavar="FILE")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = harness.build_config(
            args.experiment,
            trials=args.trials,
            m=args.m,
            p_dbm=args.p_dbm,
            rd=args.rd,
            schemes=args.schemes,
            seed=args.seed,
            out_path=args.out_path,
        )
    except ConfigError as exc:
        print(f"jrjs-sim: config error: {exc}", file=sys.stderr)
        return 2
    try:
        n = harness.run_to_csv(cfg)
    except OSError as exc:
        print(f"jrjs-sim: i/o error on {cfg.out_path}: {exc}", file=sys.stderr)
        return 3
    print(f"wrote {n} rows to {cfg.out_path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
