"""Matplotlib rendering of a groupoid diagram.

Objects sit on rows by height in the object order, arrows between distinct
objects are solid curved arrows, local-group arrows are summarised by a
count next to the object, and covers of the order are dashed lines.
"""

from __future__ import annotations

from collections import Counter

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.patches import FancyArrowPatch  # noqa: E402

from .core import OrderedGroupoid, csorted  # noqa: E402


def layout(G: OrderedGroupoid) -> dict:
    """Object positions: ``y`` is the height, ``x`` spreads each row evenly."""
    height = G.objects.height()
    rows: dict = {}
    for x in csorted(G.objects):
        rows.setdefault(height[x], []).append(x)
    pos = {}
    for h, row in rows.items():
        n = len(row)
        for i, x in enumerate(row):
            pos[x] = (i - (n - 1) / 2, float(h))
    return pos


def draw_groupoid(G: OrderedGroupoid, path, title: str | None = None) -> dict:
    """Write a figure of ``G`` to ``path``; returns the object positions used."""
    pos = layout(G)
    loops = Counter(G.dom(a) for a in G.arrows if not G.is_identity(a) and G.dom(a) == G.cod(a))
    rows = Counter(y for _, y in pos.values())
    fig, ax = plt.subplots(figsize=(max(3.0, 1.6 * max(rows.values(), default=1)), 1.5 + 1.3 * len(rows)))
    for lo, hi in G.objects.covers():
        (x0, y0), (x1, y1) = pos[lo], pos[hi]
        ax.plot([x0, x1], [y0, y1], linestyle="--", color="0.5", linewidth=1, zorder=1)
    seen = set()
    for a in G.arrows:
        d, c = G.dom(a), G.cod(a)
        if d == c or (d, c) in seen:
            continue
        seen.add((d, c))
        n = len(G.hom(d, c))
        patch = FancyArrowPatch(pos[d], pos[c], arrowstyle="-|>", mutation_scale=12,
                                connectionstyle="arc3,rad=0.2", shrinkA=12, shrinkB=12, color="black", zorder=2)
        ax.add_patch(patch)
        if n > 1:
            mx, my = (pos[d][0] + pos[c][0]) / 2, (pos[d][1] + pos[c][1]) / 2
            ax.annotate(f"x{n}", (mx, my), fontsize=7, color="0.3")
    for x, (px, py) in pos.items():
        ax.scatter([px], [py], s=380, color="white", edgecolors="black", zorder=3)
        ax.annotate(str(x), (px, py), ha="center", va="center", fontsize=8, zorder=4)
        if loops[x]:
            ax.annotate(f"|G|={loops[x] + 1}", (px, py + 0.22), ha="center", fontsize=6, color="0.3")
    ax.set_title(title or G.name or "")
    ax.set_axis_off()
    ax.margins(0.25)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    return pos
