"""Render colored graphs to image files with matplotlib."""

from __future__ import annotations

import math

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.lines import Line2D  # noqa: E402
from matplotlib.patches import FancyArrowPatch  # noqa: E402

from .formats import DOT_PALETTE  # noqa: E402
from .graph import Graph  # noqa: E402


def circle_layout(n: int) -> list[tuple[float, float]]:
    return [(math.cos(2 * math.pi * i / max(n, 1) + math.pi / 2),
             math.sin(2 * math.pi * i / max(n, 1) + math.pi / 2)) for i in range(n)]


def draw_coloring(g: Graph, coloring, path, title: str | None = None, directed: bool = False):
    """Write a picture of ``g`` with edges (or arcs, when ``directed``) in their colors."""
    pos = circle_layout(g.n)
    index = {c: i for i, c in enumerate(coloring.palette)}
    fig, ax = plt.subplots(figsize=(5, 5))
    for (u, v), c in sorted(coloring.assignment.items()):
        col = DOT_PALETTE[index[c] % len(DOT_PALETTE)]
        if directed:
            ax.add_patch(FancyArrowPatch(pos[u], pos[v], arrowstyle="-|>", mutation_scale=10,
                                         connectionstyle="arc3,rad=0.12", color=col, lw=1.4,
                                         shrinkA=7, shrinkB=7))
        else:
            ax.plot([pos[u][0], pos[v][0]], [pos[u][1], pos[v][1]], color=col, lw=2, zorder=1)
    xs, ys = zip(*pos) if pos else ((), ())
    ax.scatter(xs, ys, s=160, c="white", edgecolors="black", zorder=2)
    for v, (x, y) in enumerate(pos):
        ax.annotate(str(v), (x, y), ha="center", va="center", fontsize=7, zorder=3)
    used = [c for c in coloring.palette if c in set(coloring.assignment.values())]
    handles = [Line2D([], [], color=DOT_PALETTE[index[c] % len(DOT_PALETTE)], lw=2, label=str(c))
               for c in used]
    if handles:
        ax.legend(handles=handles, title="color", loc="upper right", fontsize=7, frameon=False)
    if title:
        ax.set_title(title)
    ax.set_aspect("equal")
    ax.axis("off")
    fig.savefig(path, dpi=120, bbox_inches="tight")
    plt.close(fig)
