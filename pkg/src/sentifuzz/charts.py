"""
Pie chart rendering for the sentiment class distribution.
"""

import logging
import math
from pathlib import Path
from typing import List, Optional, Sequence, Tuple, Union
from xml.sax.saxutils import escape

try:
    from PIL import Image, ImageDraw
except ImportError:
    Image = None
    ImageDraw = None

from .exceptions import ChartError

logger = logging.getLogger(__name__)

Slice = Tuple[str, float]

CLASS_COLORS = {
    "strong_negative": "#8b0000",
    "negative": "#d7301f",
    "weak_negative": "#fc8d59",
    "objective": "#bdbdbd",
    "weak_positive": "#a1d99b",
    "positive": "#41ab5d",
    "strong_positive": "#005a32",
}
FALLBACK_COLOR = "#6baed6"

SIZE = 480
RADIUS = 160
LEGEND_X = 360


def _color(label: str) -> str:
    return CLASS_COLORS.get(label, FALLBACK_COLOR)


def _angles(slices: Sequence[Slice]) -> List[Tuple[str, float, float, float]]:
    """(label, percent, start degree, end degree) with 0° at twelve o'clock."""
    result = []
    start = 0.0
    for label, percent in slices:
        end = start + percent * 3.6
        result.append((label, percent, start, end))
        start = end
    return result


def _point(cx: float, cy: float, degrees: float) -> Tuple[float, float]:
    radians = math.radians(degrees - 90.0)
    return cx + RADIUS * math.cos(radians), cy + RADIUS * math.sin(radians)


def pie_svg(slices: Sequence[Slice], title: str = "Sentiment distribution") -> str:
    """Return a standalone SVG document with one labelled sector per slice."""
    cx = cy = SIZE / 2 - 40
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE + 160}" '
        f'height="{SIZE}" viewBox="0 0 {SIZE + 160} {SIZE}">',
        f"<title>{escape(title)}</title>",
    ]
    for label, percent, start, end in _angles(slices):
        color = _color(label)
        if percent >= 100.0:
            parts.append(
                f'<circle cx="{cx:.3f}" cy="{cy:.3f}" r="{RADIUS}" fill="{color}"/>'
            )
            continue
        if percent <= 0.0:
            continue
        x1, y1 = _point(cx, cy, start)
        x2, y2 = _point(cx, cy, end)
        large_arc = 1 if end - start > 180.0 else 0
        parts.append(
            f'<path d="M {cx:.3f} {cy:.3f} L {x1:.3f} {y1:.3f} '
            f'A {RADIUS} {RADIUS} 0 {large_arc} 1 {x2:.3f} {y2:.3f} Z" '
            f'fill="{color}" stroke="#ffffff" stroke-width="1">'
            f"<title>{escape(label)} {percent:.1f}%</title></path>"
        )
    for row, (label, percent) in enumerate(slices):
        y = 40 + row * 24
        parts.append(
            f'<rect x="{LEGEND_X + 40}" y="{y - 12}" width="14" height="14" '
            f'fill="{_color(label)}"/>'
        )
        parts.append(
            f'<text x="{LEGEND_X + 60}" y="{y}" font-family="sans-serif" '
            f'font-size="13">{escape(label)} {percent:.1f}%</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def pie_image(slices: Sequence[Slice]) -> "Image.Image":
    """
    Draw the pie chart as a Pillow image.

    Raises:
        ChartError: If Pillow is not installed
    """
    if Image is None or ImageDraw is None:
        raise ChartError("Pillow is required for raster charts: pip install Pillow")
    image = Image.new("RGB", (SIZE + 160, SIZE), "white")
    draw = ImageDraw.Draw(image)
    cx = cy = SIZE / 2 - 40
    box = [cx - RADIUS, cy - RADIUS, cx + RADIUS, cy + RADIUS]
    for label, percent, start, end in _angles(slices):
        if percent <= 0.0:
            continue
        # Pillow measures angles clockwise from three o'clock
        draw.pieslice(
            box, start - 90.0, end - 90.0, fill=_color(label), outline="white"
        )
    for row, (label, percent) in enumerate(slices):
        y = 40 + row * 24
        draw.rectangle(
            [LEGEND_X + 40, y - 12, LEGEND_X + 54, y + 2], fill=_color(label)
        )
        draw.text((LEGEND_X + 60, y - 12), f"{label} {percent:.1f}%", fill="black")
    return image


def render_pie(
    slices: Sequence[Slice],
    path: Union[str, Path],
    format: Optional[str] = None,
) -> Path:
    """
    Write the pie chart to a file.

    Args:
        slices: (label, percent) pairs
        path: Destination; parent directories are created
        format: "SVG" or any Pillow format; taken from the suffix when None

    Returns:
        Path: Absolute path of the written file

    Raises:
        ChartError: If writing fails
    """
    path = Path(path)
    if format is None:
        format = path.suffix.lstrip(".").upper() or "SVG"
    format = format.upper()
    if format == "JPG":
        format = "JPEG"

    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        if format == "SVG":
            path.write_text(pie_svg(slices), encoding="utf-8")
        else:
            pie_image(slices).save(path, format=format)
    except ChartError:
        raise
    except Exception as e:
        raise ChartError(f"Failed to write chart to {path}: {e}") from e

    logger.info("Pie chart written to %s", path)
    return path.absolute()
