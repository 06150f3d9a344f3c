"""Figures written next to the delimited CLI output."""

from __future__ import annotations

from typing import Dict, List, Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.patches import Rectangle  # noqa: E402

from .apery import phi  # noqa: E402
from .invariants import maximal_candidates  # noqa: E402
from .rodseth import AAParams, LShape  # noqa: E402

MAX_LABELLED = 400


def plot_lshape(p: AAParams, L: LShape, pseudo_frobenius: Sequence[int], path: str) -> None:
    """Draw ``A`` and ``B`` with each lattice point labelled by its Apery value.

    Points whose value minus ``a`` is pseudo-Frobenius are highlighted.
    """
    fig, ax = plt.subplots(figsize=(6, 4))
    for (x0, x1, y0, y1), color, name in ((L.A, "C0", "A"), (L.B, "C1", "B")):
        if x1 < x0 or y1 < y0:
            continue
        ax.add_patch(Rectangle((x0 - 0.4, y0 - 0.4), x1 - x0 + 0.8, y1 - y0 + 0.8,
                               alpha=0.15, color=color, label=name))
    pts = list(L.points())
    maximal = set(pseudo_frobenius)
    label = len(pts) <= MAX_LABELLED
    for x, y in pts:
        w = phi(x, y, p)
        hit = (w - p.a) in maximal
        ax.plot(x, y, "o", color="C3" if hit else "k", ms=6 if hit else 3)
        if label:
            ax.annotate(str(w), (x, y), textcoords="offset points", xytext=(3, 3), fontsize=7)
    cand = maximal_candidates(L, p.k)
    if cand:
        xs, ys = zip(*cand)
        ax.plot(xs, ys, "s", mfc="none", mec="C2", ms=10, label="candidates")
    ax.set_xlabel("x")
    ax.set_ylabel("y")
    ax.set_title(f"L-shape of <{p.a}, ..., {p.a + p.k * p.d}, {p.c}>")
    ax.set_aspect("equal", adjustable="datalim")
    ax.autoscale_view()
    ax.legend(loc="upper right", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def plot_bench(rows: List[Dict], path: str) -> None:
    fig, ax = plt.subplots(figsize=(6, 4))
    a = [r["a"] for r in rows]
    for key, lab in (("fast_us", "boundary data"), ("apery_us", "Apery set"), ("oracle_us", "oracle")):
        pts = [(x, r[key]) for x, r in zip(a, rows) if r[key] != "skipped"]
        if pts:
            xs, ys = zip(*pts)
            ax.loglog(xs, ys, "o-", label=lab)
    ax.set_xlabel("a")
    ax.set_ylabel("time / us")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
