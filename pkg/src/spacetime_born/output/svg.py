"""Self-contained SVG line plot of Delta versus P."""

import math
from typing import List, Sequence, Tuple

WIDTH = 640
HEIGHT = 420
MARGIN_LEFT = 80
MARGIN_RIGHT = 30
MARGIN_TOP = 50
MARGIN_BOTTOM = 60
LINE_COLOR = "#1f77b4"


def _escape(text: str) -> str:
    return (
        text.replace("&", "&amp;")
        .replace("<", "&lt;")
        .replace(">", "&gt;")
        .replace('"', "&quot;")
        .replace("'", "&#39;")
    )


def _nice_step(span: float, target_ticks: int = 6) -> float:
    raw = span / target_ticks
    magnitude = 10 ** math.floor(math.log10(raw))
    for factor in (1, 2, 5, 10):
        if factor * magnitude >= raw:
            return factor * magnitude
    return 10 * magnitude


def _y_range(values: Sequence[float]) -> Tuple[float, float]:
    low, high = min(min(values), 0.0), max(max(values), 0.0)
    if high - low < 1e-12:
        low, high = -1.0, 1.0
    step = _nice_step(high - low)
    return math.floor(low / step) * step, math.ceil(high / step) * step


def render_line_plot(
    title: str,
    x_label: str,
    y_label: str,
    points: Sequence[Tuple[float, float]],
    x_range: Tuple[float, float] = (0.0, 1.0),
) -> str:
    """
    Render a single-series polyline with axis ticks as an SVG 1.1 document.

    Args:
        title: Plot title
        x_label: Horizontal axis label
        y_label: Vertical axis label
        points: (x, y) pairs in drawing order
        x_range: Horizontal axis limits

    Returns:
        SVG document text

    Raises:
        ValueError: If there are no points
    """
    if not points:
        raise ValueError("No points to plot")

    plot_left, plot_right = MARGIN_LEFT, WIDTH - MARGIN_RIGHT
    plot_top, plot_bottom = MARGIN_TOP, HEIGHT - MARGIN_BOTTOM
    x_min, x_max = x_range
    y_min, y_max = _y_range([y for _, y in points])

    def x_to_px(x: float) -> float:
        return plot_left + (x - x_min) / (x_max - x_min) * (plot_right - plot_left)

    def y_to_px(y: float) -> float:
        return plot_bottom - (y - y_min) / (y_max - y_min) * (plot_bottom - plot_top)

    lines: List[str] = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">',
        '<rect x="0" y="0" width="100%" height="100%" fill="#ffffff"/>',
        f'<text x="{WIDTH / 2:.1f}" y="28" text-anchor="middle" font-size="18" font-family="Arial">'
        f"{_escape(title)}</text>",
    ]

    y_step = _nice_step(y_max - y_min)
    ticks = int(round((y_max - y_min) / y_step))
    for i in range(ticks + 1):
        value = y_min + i * y_step
        y = y_to_px(value)
        lines.append(
            f'<line x1="{plot_left}" y1="{y:.2f}" x2="{plot_right}" y2="{y:.2f}" stroke="#d9d9d9" stroke-width="1"/>'
        )
        lines.append(
            f'<text x="{plot_left - 8}" y="{y + 4:.2f}" text-anchor="end" font-size="12" font-family="Arial">'
            f"{value:g}</text>"
        )

    for i in range(6):
        value = x_min + i * (x_max - x_min) / 5
        x = x_to_px(value)
        lines.append(
            f'<line x1="{x:.2f}" y1="{plot_bottom}" x2="{x:.2f}" y2="{plot_bottom + 6}" '
            'stroke="#000000" stroke-width="1"/>'
        )
        lines.append(
            f'<text x="{x:.2f}" y="{plot_bottom + 22}" text-anchor="middle" font-size="12" font-family="Arial">'
            f"{value:g}</text>"
        )

    axis_style = 'stroke="#000000" stroke-width="2"'
    lines.append(f'<line x1="{plot_left}" y1="{plot_bottom}" x2="{plot_right}" y2="{plot_bottom}" {axis_style}/>')
    lines.append(f'<line x1="{plot_left}" y1="{plot_top}" x2="{plot_left}" y2="{plot_bottom}" {axis_style}/>')

    poly_points = " ".join(f"{x_to_px(x):.2f},{y_to_px(y):.2f}" for x, y in points)
    lines.append(f'<polyline fill="none" stroke="{LINE_COLOR}" stroke-width="2" points="{poly_points}"/>')

    lines.append(
        f'<text x="{(plot_left + plot_right) / 2:.1f}" y="{HEIGHT - 18}" text-anchor="middle" font-size="14" '
        f'font-family="Arial">{_escape(x_label)}</text>'
    )
    lines.append(
        f'<text x="20" y="{(plot_top + plot_bottom) / 2:.1f}" text-anchor="middle" font-size="14" font-family="Arial" '
        f'transform="rotate(-90 20 {(plot_top + plot_bottom) / 2:.1f})">{_escape(y_label)}</text>'
    )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
