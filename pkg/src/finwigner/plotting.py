"""Render Wigner grids as heatmap figures.

matplotlib is imported lazily so the exact-arithmetic library and the
data-only CLI paths never pay for it.
"""

from __future__ import annotations

from .oscillator import OscillatorModel
from .wigner import WignerMatrix


def save_heatmap(w: WignerMatrix, model: OscillatorModel, path: str, *,
                 title: str | None = None) -> None:
    """Write a heatmap of W(n) to an image file (format from the extension).

    Axes carry the node values; the color scale is symmetric about zero so
    negative quasi-probability cells are visible against positive ones.
    """
    from matplotlib.figure import Figure

    grid = [[float(x) for x in row] for row in w.matrix.tolist()]
    j = float(model.j)
    span = max((abs(x) for row in grid for x in row), default=0.0) or 1.0

    fig = Figure(figsize=(5.4, 4.4))
    ax = fig.add_subplot(111)
    image = ax.imshow(
        grid,
        origin="lower",
        extent=(-j - 0.5, j + 0.5, -j - 0.5, j + 0.5),
        cmap="RdBu_r",
        vmin=-span,
        vmax=span,
    )
    ax.set_xlabel("position node")
    ax.set_ylabel("momentum node")
    ax.set_title(title or f"Wigner matrix, 2j={model.two_j}, n={w.n}")
    fig.colorbar(image, ax=ax)
    fig.savefig(path, dpi=150)
