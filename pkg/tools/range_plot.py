"""
NumRange Toolkit - Boundary plot
Static SVG of a sampled numerical range: boundary polygon, eigenvalue
markers and equal-scale axes, sized so the range plus a margin fills the viewport.
"""

import logging
from pathlib import Path

import matplotlib
from matplotlib.figure import Figure

from config.settings import Settings
from tools.range_analysis import RangeBoundary

logger = logging.getLogger(__name__)

# SVG user units are points
_POINTS_PER_INCH = 72


def _view_limits(boundary: RangeBoundary):
    points = list(boundary.inner_polygon()) + list(boundary.eigenvalues)
    xs = [z.real for z in points]
    ys = [z.imag for z in points]
    cx, cy = (min(xs) + max(xs)) / 2, (min(ys) + max(ys)) / 2
    half = max(max(xs) - min(xs), max(ys) - min(ys)) / 2
    if half == 0.0:
        # single point: show a unit window around it
        half = max(abs(cx), abs(cy), 1.0) * 0.5
    half *= 1.0 + Settings.SVG_MARGIN
    return (cx - half, cx + half), (cy - half, cy + half)


def render_svg(boundary: RangeBoundary, title: str, path) -> Path:
    """Write the boundary figure to path as a standalone SVG"""
    size = Settings.SVG_VIEWPORT_PX / _POINTS_PER_INCH
    fig = Figure(figsize=(size, size), dpi=_POINTS_PER_INCH)
    ax = fig.add_subplot(1, 1, 1)

    polygon = boundary.inner_polygon()
    xs = list(polygon.real) + [polygon[0].real]
    ys = list(polygon.imag) + [polygon[0].imag]
    label = "W(T) boundary" if not boundary.degenerate else f"W(T) ({boundary.shape})"
    ax.fill(xs, ys, color="#9ecae1", alpha=0.4, linewidth=0)
    ax.plot(xs, ys, color="#08519c", linewidth=1.2, label=label)
    if boundary.shape == "point":
        ax.plot([polygon[0].real], [polygon[0].imag], "o", color="#08519c")
    ax.plot(
        boundary.eigenvalues.real,
        boundary.eigenvalues.imag,
        "x",
        color="#cb181d",
        markersize=7,
        label="eigenvalues",
    )

    (x0, x1), (y0, y1) = _view_limits(boundary)
    ax.set_xlim(x0, x1)
    ax.set_ylim(y0, y1)
    ax.set_aspect("equal", adjustable="box")
    ax.axhline(0.0, color="#636363", linewidth=0.6)
    ax.axvline(0.0, color="#636363", linewidth=0.6)
    ax.set_xlabel("Re")
    ax.set_ylabel("Im")
    ax.set_title(title)
    ax.legend(loc="upper right", fontsize="small")
    ax.grid(True, linewidth=0.3, alpha=0.5)

    path = Path(path)
    # fixed salt and no date keep the file reproducible
    with matplotlib.rc_context({"svg.hashsalt": "numrange", "svg.fonttype": "none"}):
        fig.savefig(path, format="svg", metadata={"Date": None})
    logger.debug(f"Boundary plot written to {path}")
    return path
