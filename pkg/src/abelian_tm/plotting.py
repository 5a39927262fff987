"""Static figures written next to the CSV output."""
from __future__ import annotations

from typing import Mapping, Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

# fixed salt and no date stamp keep the SVG byte-identical between runs
_RC = {
    "svg.hashsalt": "abelian-tm",
    "svg.fonttype": "none",
    "font.size": 10,
    "axes.spines.top": False,
    "axes.spines.right": False,
}


def line_chart(
    path: str,
    xs: Sequence[int],
    series: Mapping[str, Sequence[int | None]],
    title: str,
    ylabel: str,
) -> None:
    with plt.rc_context(_RC):
        fig, ax = plt.subplots(figsize=(7, 3.5))
        for label, ys in series.items():
            pts = [(x, y) for x, y in zip(xs, ys) if y is not None]
            if not pts:
                continue
            ax.plot([p[0] for p in pts], [p[1] for p in pts], marker="o", markersize=2.5,
                    linewidth=1, label=label)
        ax.set_xlabel("n")
        ax.set_ylabel(ylabel)
        ax.set_title(title)
        if len(series) > 1:
            ax.legend(frameon=False)
        fig.tight_layout()
        fig.savefig(path, format="svg", metadata={"Date": None})
        plt.close(fig)
