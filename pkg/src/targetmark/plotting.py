"""Figure rendering for report documents.

Figures are written next to the delimited output; they are a convenience
layer and carry no values that are not already in the CSV/JSON documents.
"""

from __future__ import annotations

from typing import Optional, Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .published import PRICE_CHANGE_LABEL, PUBLISHED
from .scenarios import SweepPoint, TableRow


def save_curve_figure(
    intensities: Sequence[float], informed: Sequence[float], lam: float, path
) -> None:
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    ax.plot(intensities, informed, color="tab:blue")
    ax.set_xlabel("advertising intensity per person")
    ax.set_ylabel("informed fraction")
    ax.set_title(f"Informed-fraction response curve (lambda = {lam:g})")
    ax.set_ylim(0.0, 1.0)
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_table_figure(
    table_id: str,
    rows: Sequence[TableRow],
    path,
    published: Optional[dict] = None,
) -> None:
    """Two panels: prices per column, and the price change from targeting."""
    published = PUBLISHED[table_id] if published is None else published
    columns = list(range(1, len(rows) + 1))
    uniform_prices = [r.uniform_price for r in rows]
    targeted_prices = [r.targeted_price for r in rows]
    changes = [r.price_change_pct for r in rows]

    fig, (top, bottom) = plt.subplots(2, 1, figsize=(6.5, 6.5), sharex=True)
    width = 0.35
    top.bar([c - width / 2 for c in columns], uniform_prices, width,
            label="uniform advertising", color="tab:gray")
    top.bar([c + width / 2 for c in columns], targeted_prices, width,
            label="targeted advertising", color="tab:blue")
    top.set_ylabel("free-entry price")
    top.set_title(f"{table_id}: prices and price change by column")
    top.legend(fontsize=8)
    top.grid(True, axis="y", alpha=0.3)

    bottom.bar(columns, changes, 0.5, color="tab:red", label="computed")
    ref = published.get(PRICE_CHANGE_LABEL)
    if ref is not None:
        bottom.plot(columns, ref, "k_", markersize=18, label="published")
    bottom.axhline(0.0, color="black", linewidth=0.8)
    bottom.set_xlabel("table column")
    bottom.set_ylabel("price change (%)")
    bottom.set_xticks(columns)
    bottom.legend(fontsize=8)
    bottom.grid(True, axis="y", alpha=0.3)

    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_sweep_figure(parameter: str, points: Sequence[SweepPoint], path) -> None:
    solved = [(p.value, p.report.price_change_fraction * 100.0)
              for p in points if p.report is not None]
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    if solved:
        xs, ys = zip(*solved)
        ax.plot(xs, ys, "o-", color="tab:blue")
    ax.axhline(0.0, color="black", linewidth=0.8)
    ax.set_xlabel(parameter)
    ax.set_ylabel("price change (%)")
    ax.set_title(f"Price change from targeting vs {parameter}")
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


__all__ = ["save_curve_figure", "save_table_figure", "save_sweep_figure"]
