"""PNG drawings of a quiver and its AR quiver (matplotlib, Agg backend)."""

from __future__ import annotations

import math
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.patches import FancyArrowPatch  # noqa: E402

from .lattices import IRREDUCIBLE_COVER, ARQuiver, Projective  # noqa: E402
from .presentation import GentlePresentation  # noqa: E402


def _circle_layout(names) -> dict:
    n = max(len(names), 1)
    return {
        v: (math.cos(math.pi / 2 - 2 * math.pi * i / n), math.sin(math.pi / 2 - 2 * math.pi * i / n))
        for i, v in enumerate(names)
    }


def _arrow(ax, p, q, rad=0.0, style="-", color="black", label=None):
    if p == q:
        # loop: small circle above the vertex
        x, y = p
        ax.add_patch(plt.Circle((x, y + 0.12), 0.1, fill=False, color=color, linestyle=style))
        if label:
            ax.annotate(label, (x, y + 0.26), ha="center", fontsize=8)
        return
    patch = FancyArrowPatch(
        p, q, arrowstyle="-|>", mutation_scale=12, shrinkA=12, shrinkB=12,
        connectionstyle=f"arc3,rad={rad}", color=color, linestyle=style,
    )
    ax.add_patch(patch)
    if label:
        mx, my = (p[0] + q[0]) / 2, (p[1] + q[1]) / 2
        dx, dy = q[0] - p[0], q[1] - p[1]
        ax.annotate(label, (mx - rad * dy * 0.6, my + rad * dx * 0.6), ha="center", fontsize=8, color=color)


def _finish(fig, ax, path) -> Path:
    ax.set_xlim(-1.4, 1.4)
    ax.set_ylim(-1.4, 1.5)
    ax.set_aspect("equal")
    ax.axis("off")
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(path, dpi=120, bbox_inches="tight")
    plt.close(fig)
    return path


def draw_quiver(gp: GentlePresentation, path) -> Path:
    """Vertices on a circle; 2-regular vertices drawn filled."""
    pos = _circle_layout(gp.vertices)
    fig, ax = plt.subplots(figsize=(6, 6))
    seen: dict = {}
    for a in gp.quiver.arrows:
        key = frozenset((a.source, a.target))
        k = seen.get(key, 0)
        seen[key] = k + 1
        _arrow(ax, pos[a.source], pos[a.target], rad=0.15 + 0.2 * k, label=a.name)
    for v, (x, y) in pos.items():
        face = "lightgray" if gp.is_two_regular(v) else "white"
        ax.add_patch(plt.Circle((x, y), 0.08, facecolor=face, edgecolor="black", zorder=3))
        ax.annotate(v, (x, y), ha="center", va="center", fontsize=9, zorder=4)
    ax.set_title(gp.quiver.name)
    return _finish(fig, ax, path)


def draw_ar_quiver(arq: ARQuiver, path, title: str = "AR quiver") -> Path:
    """Irreducible maps solid, the translate dashed grey."""
    pos = _circle_layout(arq.nodes)
    fig, ax = plt.subplots(figsize=(7, 7))
    for e in arq.edges:
        color = "tab:blue" if e.kind == IRREDUCIBLE_COVER else "black"
        _arrow(ax, pos[e.source], pos[e.target], rad=0.1, color=color)
    for src, dst in arq.tau.items():
        _arrow(ax, pos[src], pos[dst], rad=-0.25, style="--", color="gray")
    for n, (x, y) in pos.items():
        box = "square" if isinstance(n, Projective) else "round"
        ax.annotate(
            str(n), (x, y), ha="center", va="center", fontsize=8, zorder=4,
            bbox={"boxstyle": box, "facecolor": "white"},
        )
    ax.set_title(title)
    return _finish(fig, ax, path)
