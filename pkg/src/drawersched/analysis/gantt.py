"""Gantt chart rendering of a portfolio schedule."""

from __future__ import annotations

import logging

from PIL import Image, ImageDraw

from ..models.portfolio import Portfolio
from ..models.schedule import Schedule

_LOGGER = logging.getLogger(__name__)

_BACKGROUND = (255, 255, 255)
_GRID = (225, 225, 225)
_SEPARATOR = (120, 120, 120)
_MARGIN = 4

# Bar colors, cycled per project
PROJECT_COLORS: tuple[tuple[int, int, int], ...] = (
    (31, 119, 180),
    (255, 127, 14),
    (44, 160, 44),
    (214, 39, 40),
    (148, 103, 189),
    (140, 86, 75),
    (227, 119, 194),
    (127, 127, 127),
    (188, 189, 34),
    (23, 190, 207),
)


def render_gantt(
    schedule: Schedule,
    portfolio: Portfolio,
    *,
    period_width: int = 12,
    row_height: int = 16,
) -> Image.Image:
    """Draw one bar per non-dummy activity, rows grouped by project.

    Zero-duration activities get no row. A vertical grid line marks every
    period and a horizontal line separates consecutive projects.

    Args:
        schedule: Schedule to draw (must cover every activity of ``portfolio``)
        portfolio: Portfolio the schedule belongs to
        period_width: Pixels per period
        row_height: Pixels per activity row

    Returns:
        RGB image

    Raises:
        ValueError: If a size parameter is not positive
        KeyError: If the schedule misses an activity
    """
    if period_width < 1 or row_height < 2:
        raise ValueError(f"period_width must be >= 1 and row_height >= 2, got {period_width}, {row_height}")

    rows = [(project.project_index, a) for project in portfolio.projects for a in project.activities if a.duration]
    tms = schedule.tms
    width = 2 * _MARGIN + max(tms, 1) * period_width
    height = 2 * _MARGIN + max(len(rows), 1) * row_height

    image = Image.new("RGB", (width, height), _BACKGROUND)
    draw = ImageDraw.Draw(image)
    for period in range(tms + 1):
        x = _MARGIN + period * period_width
        draw.line([(x, _MARGIN), (x, height - _MARGIN)], fill=_GRID)

    previous_project: int | None = None
    for row, (project_index, activity) in enumerate(rows):
        top = _MARGIN + row * row_height
        if previous_project is not None and project_index != previous_project:
            draw.line([(_MARGIN, top), (width - _MARGIN, top)], fill=_SEPARATOR)
        previous_project = project_index

        start = schedule.start(activity.id)
        left = _MARGIN + start * period_width
        right = _MARGIN + (start + activity.duration) * period_width - 1
        color = PROJECT_COLORS[project_index % len(PROJECT_COLORS)]
        draw.rectangle([(left, top + 1), (right, top + row_height - 2)], fill=color)

    _LOGGER.debug("Rendered Gantt chart %dx%d with %d bars", width, height, len(rows))
    return image
