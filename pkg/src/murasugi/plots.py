"""Matplotlib rendering of report summaries.

Figures are written next to the delimited report output when requested; the
text reports themselves never change.  matplotlib is imported lazily with the
Agg backend so headless runs work.
"""

from __future__ import annotations

import os
from collections import Counter

from .report import ObstructionReport

_VERDICT_ORDER = ("norm", "not-norm", "inconclusive", "error")
_VERDICT_COLOR = {
    "norm": "#2a9d8f",
    "not-norm": "#e76f51",
    "inconclusive": "#e9c46a",
    "error": "#6c757d",
}
_STATUS_VALUE = {"pass": 1.0, "fail": 0.0, "skip": 0.5}


def _pyplot():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def render_verdict_summary(counts: dict[str, int], path: str) -> str:
    """Bar chart of batch verdict counts."""
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(5, 3.2))
    labels = [v for v in _VERDICT_ORDER]
    values = [counts.get(v, 0) for v in labels]
    ax.bar(labels, values, color=[_VERDICT_COLOR[v] for v in labels])
    for i, v in enumerate(values):
        ax.text(i, v, str(v), ha="center", va="bottom", fontsize=9)
    ax.set_ylabel("inputs")
    ax.set_title("verdict summary")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def render_battery_matrix(reports: list[ObstructionReport], path: str) -> str:
    """Pass/fail/skip heatmap: one row per input, one column per check."""
    plt = _pyplot()
    names: list[str] = []
    for rep in reports:
        for chk in rep.battery:
            if chk.name not in names:
                names.append(chk.name)
    if not reports or not names:
        fig, ax = plt.subplots(figsize=(4, 2))
        ax.text(0.5, 0.5, "no battery data", ha="center", va="center")
        ax.axis("off")
        fig.savefig(path, dpi=150)
        plt.close(fig)
        return path
    grid = []
    for rep in reports:
        status = {chk.name: chk.status for chk in rep.battery}
        grid.append([_STATUS_VALUE.get(status.get(n, "skip"), 0.5) for n in names])
    fig, ax = plt.subplots(figsize=(1.2 + 0.6 * len(names), 1.0 + 0.35 * len(reports)))
    ax.imshow(grid, cmap="RdYlGn", vmin=0.0, vmax=1.0, aspect="auto")
    ax.set_xticks(range(len(names)), names, rotation=45, ha="right", fontsize=8)
    ax.set_yticks(
        range(len(reports)),
        [rep.input_text[:24] for rep in reports],
        fontsize=8,
    )
    ax.set_title("battery checks (green pass / red fail / amber skip)")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def render_batch_figures(
    reports: list[ObstructionReport], counts: dict[str, int], outdir: str
) -> list[str]:
    os.makedirs(outdir, exist_ok=True)
    out = [
        render_verdict_summary(counts, os.path.join(outdir, "verdict_summary.png")),
        render_battery_matrix(reports, os.path.join(outdir, "battery_matrix.png")),
    ]
    return out


def render_report_figure(rep: ObstructionReport, outdir: str) -> list[str]:
    counts = Counter({rep.verdict: 1})
    return render_batch_figures([rep], counts, outdir)
