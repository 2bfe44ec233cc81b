"""Figures written next to the delimited reports."""
from __future__ import annotations

from collections import defaultdict

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .metrics import EvalReport  # noqa: E402


def _finish(fig, path):
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def plot_evaluation(report: EvalReport, path, title: str = "Guesser evaluation"):
    """Two panels: word-level rates, and missing/irrelevant tag totals."""
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(9, 3.6))
    labels = ["all required", "no irrelevant", "perfect"]
    values = [float(report.pct_all_required), float(report.pct_no_irrelevant),
              float(report.pct_perfect)]
    bars = ax1.bar(labels, values, color=["#4c72b0", "#55a868", "#8172b2"])
    for bar, v in zip(bars, values):
        ax1.annotate(f"{v:.1f}%", (bar.get_x() + bar.get_width() / 2, v),
                     ha="center", va="bottom", fontsize=9)
    ax1.set_ylim(0, 105)
    ax1.set_ylabel("% of words")
    ax1.set_title(f"{report.word_count} words")

    ax2.bar(["assigned", "missing", "irrelevant"],
            [report.tag_count, report.missing_tag_total, report.irrelevant_tag_total],
            color=["#999999", "#c44e52", "#dd8452"])
    ax2.set_ylabel("tags")
    ax2.set_title(f"{float(report.avg_tags_per_word):.2f} tags per word")
    fig.suptitle(title)
    _finish(fig, path)


def plot_suffix_report(rows, path, max_panels: int = 6):
    """One horizontal bar panel per tag, longest suffix length first."""
    by_tag = defaultdict(list)
    for row in rows:
        by_tag[row.tag].append(row)
    tags = sorted(by_tag, key=lambda t: -sum(r.count for r in by_tag[t]))[:max_panels]
    if not tags:
        fig, ax = plt.subplots(figsize=(4, 2))
        ax.text(0.5, 0.5, "no suffixes", ha="center", va="center")
        ax.axis("off")
        _finish(fig, path)
        return
    ncols = min(3, len(tags))
    nrows = (len(tags) + ncols - 1) // ncols
    fig, axes = plt.subplots(nrows, ncols, figsize=(4 * ncols, 3 * nrows), squeeze=False)
    for ax, tag in zip(axes.flat, tags):
        best = sorted(by_tag[tag], key=lambda r: (-r.count, -r.length, r.suffix))[:10]
        ax.barh([f"-{r.suffix}" for r in best][::-1], [r.count for r in best][::-1], color="#4c72b0")
        ax.set_title(tag, fontsize=10)
        ax.set_xlabel("word types")
    for ax in list(axes.flat)[len(tags):]:
        ax.axis("off")
    _finish(fig, path)
