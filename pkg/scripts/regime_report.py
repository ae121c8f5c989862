"""Print the replicate-mean correlation curves behind the regime checks.

Reads the means.csv written by run_default_sweeps.py, so no recomputation.
"""

import argparse
import csv
from pathlib import Path

PAIRS = [
    ("ER", "degree:laplacian_energy"),
    ("ER", "eigencentrality:laplacian_energy"),
    ("HK", "degree:laplacian_energy"),
    ("HK", "betweenness:laplacian_energy"),
    ("ER", "clustering:graph_energy"),
    ("WS", "clustering:graph_energy"),
    ("HK", "clustering:graph_energy"),
    ("WAXMAN", "clustering:graph_energy"),
]


def load(path):
    with open(path, encoding="utf-8") as fh:
        return list(csv.DictReader(fh))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--outdir", default="runs/default")
    ap.add_argument("--every", type=int, default=10, help="print every k-th grid point")
    args = ap.parse_args()
    root = Path(args.outdir)

    for model, col in PAIRS:
        path = root / model.lower() / "means.csv"
        if not path.exists():
            print(f"{model}: no output in {root}, skipped")
            continue
        rows = load(path)
        vals = [float(r[col]) for r in rows if r[col] != ""]
        print(f"{model} {col}: min {min(vals):.3f} max {max(vals):.3f}")
        for r in rows[:: args.every]:
            print(f"  {r['param_value']:>6s} {r[col]}")

    if not (root / "ws" / "means.csv").exists():
        return
    ws = load(root / "ws" / "means.csv")
    for h in ("h_graph", "h_randic", "h_laplacian"):
        curve = [float(r[h]) for r in ws]
        peak = max(range(len(curve)), key=curve.__getitem__)
        print(f"WS {h}: start {curve[0]:.3f}, peak {curve[peak]:.3f} at p={ws[peak]['param_value']}, end {curve[-1]:.3f}")


if __name__ == "__main__":
    main()
