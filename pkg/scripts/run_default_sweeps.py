"""Run the four default sweeps and write their tables under one directory.

    python3 scripts/run_default_sweeps.py --outdir runs/default --jobs 0
"""

import argparse
import os
import time
from pathlib import Path

from egoenergy.sweep import default_sweep, run_sweep, write_sweep

MODELS = ("ER", "WS", "HK", "WAXMAN")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--outdir", default="runs/default")
    ap.add_argument("--jobs", type=int, default=1, help="0 = all cores")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--models", nargs="+", default=list(MODELS))
    args = ap.parse_args()
    jobs = args.jobs or os.cpu_count() or 1

    root = Path(args.outdir)
    for model in args.models:
        t0 = time.perf_counter()
        res = run_sweep(default_sweep(model, base_seed=args.seed), jobs=jobs)
        write_sweep(res, root / model.lower())
        print(f"{model:7s} {len(res.rows)} instances, {len(res.failures())} failed, "
              f"{time.perf_counter() - t0:.1f}s -> {root / model.lower()}")


if __name__ == "__main__":
    main()
