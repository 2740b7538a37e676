"""Matplotlib renderings of heaps and singular triples."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .deodhar import Mask, defect_set
from .heap import HeapEmbedding
from .perm import Word
from .schubert import singular_triples


def _heap_axes(ax, h: HeapEmbedding) -> None:
    cols = [c for c, _ in h.points]
    levels = [l for _, l in h.points]
    ax.set_xlim(min(cols) - 1, max(cols) + 1)
    ax.set_ylim(max(levels) + 1, -1)  # level 0 on top
    ax.set_xticks(sorted(set(cols)))
    ax.set_yticks(sorted(set(levels)))
    ax.set_xlabel("generator")
    ax.set_ylabel("level")
    ax.grid(True, alpha=0.25)


def _annotate(ax, h: HeapEmbedding) -> None:
    for j, (c, l) in enumerate(h.points, start=1):
        ax.annotate(str(j), (c, l), textcoords="offset points", xytext=(6, 6), fontsize=8)


def fig_heap(h: HeapEmbedding, path: str, mask: Mask | None = None) -> None:
    """Scatter plot of the embedding; mask zeros and defects get their
    own markers, matching the ASCII rendering's classes."""
    fig, ax = plt.subplots(figsize=(6, 4))
    if mask is None:
        ax.scatter(*zip(*h.points), c="black", s=60, zorder=3)
    else:
        record = defect_set(h.word, mask)
        groups = {"kept": [], "zero": [], "defect0": [], "defect1": []}
        for j, (pt, bit) in enumerate(zip(h.points, mask), start=1):
            if j in record.one_defects:
                groups["defect1"].append(pt)
            elif j in record.zero_defects:
                groups["defect0"].append(pt)
            elif bit == 0:
                groups["zero"].append(pt)
            else:
                groups["kept"].append(pt)
        styles = {
            "kept": dict(c="black", marker="o", label="mask 1"),
            "zero": dict(c="silver", marker="o", label="mask 0"),
            "defect1": dict(c="tab:red", marker="s", label="defect, mask 1"),
            "defect0": dict(c="tab:orange", marker="D", label="defect, mask 0"),
        }
        for key, pts in groups.items():
            if pts:
                ax.scatter(*zip(*pts), s=60, zorder=3, **styles[key])
        ax.legend(loc="best", fontsize=8)
    _heap_axes(ax, h)
    _annotate(ax, h)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def fig_singular(a: Word, h: HeapEmbedding, path: str) -> None:
    """Heap scatter with the singular triples drawn as wedges."""
    triples = singular_triples(a)
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.scatter(*zip(*h.points), c="black", s=50, zorder=3)
    for t in triples:
        jc, jl = h.point(t.left)
        kc, kl = h.point(t.bottom)
        lc, ll = h.point(t.right)
        ax.plot([jc, kc, lc], [jl, kl, ll], lw=1.5, alpha=0.7, zorder=2)
        ax.scatter([kc], [kl], c="tab:red", s=90, marker="v", zorder=4)
    ax.set_title(f"{len(triples)} singular triple(s)")
    _heap_axes(ax, h)
    _annotate(ax, h)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
