"""Figures for a verified pair: the two graphs and their spectra side by side."""

from __future__ import annotations

import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .construction import ConstructedPair  # noqa: E402
from .graph import BipartiteGraph  # noqa: E402
from .poly import real_roots  # noqa: E402
from .report import PairReport  # noqa: E402


def _draw_bipartite(ax, g: BipartiteGraph, title: str, labels=None) -> None:
    def ypos(i, count):
        return 1.0 - (i + 0.5) / max(count, 1)

    left = [(0.0, ypos(i, g.left)) for i in range(g.left)]
    right = [(1.0, ypos(j, g.right)) for j in range(g.right)]
    for i, j in g.edges():
        (x0, y0), (x1, y1) = left[i], right[j]
        ax.plot([x0, x1], [y0, y1], color="0.6", lw=0.8, zorder=1)
    ax.scatter([p[0] for p in left], [p[1] for p in left], marker="s", s=60, c="tab:blue", zorder=2)
    ax.scatter([p[0] for p in right], [p[1] for p in right], marker="o", s=60, c="tab:orange", zorder=2)
    if labels is not None:
        for v, (x, y) in enumerate(left + right):
            ax.annotate(str(labels[v]), (x, y), textcoords="offset points",
                        xytext=(-28 if x == 0 else 8, -3), fontsize=7)
    ax.set_title(title)
    ax.set_xlim(-0.4, 1.4)
    ax.set_ylim(0, 1)
    ax.axis("off")


def plot_pair(pair: ConstructedPair, path: str) -> str:
    """Draw both constructed graphs with their canonical bipartitions."""
    l1, l2 = pair.vertex_labels()
    height = max(3.0, 0.25 * max(pair.g1.left, pair.g1.right, pair.g2.left, pair.g2.right))
    fig, axes = plt.subplots(1, 2, figsize=(9, height))
    _draw_bipartite(axes[0], pair.g1, "g1: biadjacency v (x) b", l1)
    _draw_bipartite(axes[1], pair.g2, "g2: biadjacency v (x) b^T", l2)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def plot_spectra(report: PairReport, path: str) -> str:
    """Adjacency and normalized Laplacian eigenvalues of both graphs."""
    fig, axes = plt.subplots(1, 2, figsize=(10, 3.5))
    panels = [
        ("adjacency", [real_roots(p) for p in report.adj_charpolys]),
        ("normalized Laplacian", [sorted(1.0 - x for x in real_roots(p)) for p in report.norm_charpolys]),
    ]
    for ax, (name, (e1, e2)) in zip(axes, panels):
        ax.plot(range(len(e1)), e1, "o", mfc="none", ms=8, label="g1")
        ax.plot(range(len(e2)), e2, "x", ms=6, label="g2")
        ax.set_title(f"{name} spectrum")
        ax.set_xlabel("index")
        ax.set_ylabel("eigenvalue")
        ax.legend(loc="upper left", frameon=False)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def write_figures(pair: ConstructedPair, report: PairReport, directory: str, stem: str = "pair") -> list[str]:
    os.makedirs(directory, exist_ok=True)
    return [
        plot_pair(pair, os.path.join(directory, f"{stem}_graphs.png")),
        plot_spectra(report, os.path.join(directory, f"{stem}_spectra.png")),
    ]
