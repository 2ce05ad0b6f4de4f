"""Figure rendering for scan reports.

Scans aggregate their records into one PNG per level n, written next to the
delimited output.  Group-shaped scans (classify, theorem/corollary
verification, open cases) show how many (s, q) combinations are perfect at
each (r, k) cell; grid-shaped scans (lemma, resultant symmetry) show the
magnitude of the circulant determinant of F at each (r, k).
"""

from __future__ import annotations

import math
import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

__all__ = ["render_scan_figures"]


def _heatmap(path: str, grid, title: str, xlabel: str, ylabel: str, cbar_label: str):
    fig, ax = plt.subplots(figsize=(5.4, 4.6), dpi=130)
    im = ax.imshow(grid, origin="lower", cmap="viridis", aspect="auto",
                   extent=(0.5, len(grid[0]) + 0.5, 0.5, len(grid) + 0.5))
    ax.set_xlabel(xlabel)
    ax.set_ylabel(ylabel)
    ax.set_title(title)
    fig.colorbar(im, ax=ax, label=cbar_label)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


def render_scan_figures(records: list[dict], mode: str, out_dir: str) -> list[str]:
    """Render one figure per n found in the records; returns the file paths."""
    os.makedirs(out_dir, exist_ok=True)
    by_n: dict[int, list[dict]] = {}
    for rec in records:
        by_n.setdefault(rec["n"], []).append(rec)
    paths = []
    for n, recs in sorted(by_n.items()):
        path = os.path.join(out_dir, f"{mode}_n{n}.png")
        grid_shaped = all(rec["s"] is None for rec in recs)
        rs = sorted({rec["r"] for rec in recs})
        ks = sorted({rec["k"] for rec in recs})
        r_pos = {r: i for i, r in enumerate(rs)}
        k_pos = {k: i for i, k in enumerate(ks)}
        grid = [[0.0] * len(ks) for _ in rs]
        if grid_shaped:
            for rec in recs:
                mag = abs(int(rec["det"])) if rec["det"] is not None else 0
                grid[r_pos[rec["r"]]][k_pos[rec["k"]]] = math.log10(mag) if mag else -1.0
            _heatmap(path, grid, f"{mode}: log10 |det| at n={n}", "k", "r", "log10 |det|")
        else:
            for rec in recs:
                if rec["perfect"]:
                    grid[r_pos[rec["r"]]][k_pos[rec["k"]]] += 1.0
            _heatmap(path, grid, f"{mode}: perfect tuples at n={n}", "k", "r",
                     "# perfect (s,q) combinations")
        paths.append(path)
    return paths
