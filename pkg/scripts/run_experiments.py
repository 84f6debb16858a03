#!/usr/bin/env python3
"""Run the full experiment set and drop one CSV per experiment in an output
directory. This is the batch driver behind the figures; for one-off runs use
the `jrjs-sim run` CLI instead.

Full scale (1e5 trials, 1e6 for the leakage diagnostic) takes a few minutes.
Pass --trials to scale everything down for a smoke run.
"""

import argparse
import pathlib
import sys
import time

from jrjs_sim import harness

# ee_diagnostic is a cheap numerical study, so it gets a larger default
_SCALE = {"ee_diagnostic": 10}


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default="results", metavar="DIR", help="output directory")
    ap.add_argument("--trials", type=int, default=100_000, help="Monte-Carlo trials per sweep point")
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args(argv)

    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for exp in harness.EXPERIMENTS:
        cfg = harness.build_config(
            exp,
            trials=args.trials * _SCALE.get(exp, 1),
            seed=args.seed,
            out_path=str(out / f"{exp}.csv"),
        )
        t0 = time.perf_counter()
        n = harness.run_to_csv(cfg)
        print(f"{exp}: {n} rows in {time.perf_counter() - t0:.1f}s -> {cfg.out_path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
