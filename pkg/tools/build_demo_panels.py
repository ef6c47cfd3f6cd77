"""Regenerate the synthetic demonstration panels in src/foi/data/.

The shipped panels are synthetic: they exercise the pipeline end to end
but do not contain any real country statistics.

Run from the repo root: python tools/build_demo_panels.py
"""

import csv
import sys
from pathlib import Path

import numpy as np

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from foi.manifest import default_manifest  # noqa: E402
from foi.reference import load_fixture  # noqa: E402


def build_epoch(codes, manifest, seed, missing_rate):
    rng = np.random.default_rng(seed)
    n, p = len(codes), len(manifest)
    # per-country quality level plus indicator-specific scale/noise
    quality = rng.normal(0.0, 1.0, size=n)
    grid = np.empty((n, p))
    for j, spec in enumerate(manifest):
        scale = rng.uniform(5.0, 50.0)
        offset = rng.uniform(0.0, 100.0)
        sign = -1.0 if spec.direction == "lower_is_better" else 1.0
        noise = rng.normal(0.0, 0.6, size=n)
        grid[:, j] = offset + scale * (sign * quality + noise)
    holes = rng.random((n, p)) < missing_rate
    # keep at least two observed values per column
    for j in range(p):
        while holes[:, j].sum() > n - 2:
            holes[rng.integers(n), j] = False
    grid = np.round(grid, 3)
    return grid, holes


def write_csv(path, codes, manifest, grid, holes):
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["country", *[s.id for s in manifest]])
        for i, code in enumerate(codes):
            cells = ["" if holes[i, j] else f"{grid[i, j]:.3f}" for j in range(grid.shape[1])]
            writer.writerow([code, *cells])


def build_fa_panel(path, codes, seed):
    rng = np.random.default_rng(seed)
    n, p, k = len(codes), 12, 2
    lam = np.zeros((p, k))
    for j in range(p):
        lam[j, j % k] = 0.75
    factors = rng.standard_normal((n, k))
    grid = factors @ lam.T + 0.5 * rng.standard_normal((n, p))
    holes = rng.random((n, p)) < 0.03
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["country", *[f"var{j + 1:02d}" for j in range(p)]])
        for i, code in enumerate(codes):
            cells = ["" if holes[i, j] else f"{grid[i, j]:.5f}" for j in range(p)]
            writer.writerow([code, *cells])


def main():
    manifest = default_manifest()
    codes = sorted(load_fixture().countries)
    out = Path(__file__).resolve().parents[1] / "src" / "foi" / "data"
    for epoch, seed, rate in ((2010, 11, 0.04), (2020, 12, 0.02)):
        grid, holes = build_epoch(codes, manifest, seed, rate)
        write_csv(out / f"demo_panel_{epoch}.csv", codes, manifest, grid, holes)
    build_fa_panel(out / "demo_fa_panel.csv", codes, seed=13)
    print(f"wrote demo panels to {out}")


if __name__ == "__main__":
    main()
