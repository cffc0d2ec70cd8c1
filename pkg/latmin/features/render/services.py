"""ASCII and SVG views of Z² windows: cells, unit squares, boundary edges, currents."""

import logging
from typing import List, Optional

from latmin.core.config import settings
from latmin.core.errors import usage_error
from latmin.features.catalog2d.services import classify_boundary
from latmin.features.currents.models import Certificate
from latmin.features.lattice.models import Point, Window
from latmin.features.lattice.schemas import PatternOracle

logger = logging.getLogger(__name__)


def _require_plane(A: PatternOracle, W: Window) -> None:
    if A.dim != 2 or W.dim != 2:
        raise usage_error("rendering is available for Z² windows only")


def render_ascii(A: PatternOracle, W: Window, mark: Optional[Point] = None) -> str:
    """'#' for members, '.' otherwise, top row first; ``mark`` is drawn as '@'."""
    _require_plane(A, W)
    test = A.predicate()
    rows = []
    for y in range(W.hi[1], W.lo[1] - 1, -1):
        row = []
        for x in range(W.lo[0], W.hi[0] + 1):
            if mark is not None and (x, y) == tuple(mark):
                row.append("@")
            else:
                row.append("#" if test((x, y)) else ".")
        rows.append("".join(row))
    return "\n".join(rows) + "\n"


def render_svg(A: PatternOracle, W: Window, certificate: Optional[Certificate] = None) -> str:
    """Geometric realization of A ∩ W.

    Unit squares of A are shaded, lattice edges of A are thin, boundary
    edges are bold, and a certificate adds one arrow per edge carrying
    nonzero current, pointing along the positive direction.
    """
    _require_plane(A, W)
    test = A.predicate()
    cell = settings.SVG_CELL_SIZE
    pad = cell
    width = (W.shape[0] - 1) * cell + 2 * pad
    height = (W.shape[1] - 1) * cell + 2 * pad

    def px(p: Point) -> tuple:
        return pad + (p[0] - W.lo[0]) * cell, pad + (W.hi[1] - p[1]) * cell

    members = [p for p in W.cells() if test(p)]
    analysis = classify_boundary(A, W)
    bold = {edge for edge in analysis.boundary_edges if edge[0] in W and edge[1] in W}

    rows: List[str] = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg width="{width}" height="{height}" viewBox="0 0 {width} {height}" '
        'xmlns="http://www.w3.org/2000/svg">',
        "<defs>",
        '<marker id="arrow" viewBox="0 0 10 10" refX="9" refY="5" markerWidth="6" '
        'markerHeight="6" orient="auto-start-reverse"><path d="M 0 0 L 10 5 L 0 10 z" '
        'fill="black"/></marker>',
        "</defs>",
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
    ]

    # unit squares
    for x, y in members:
        corners = [(x + 1, y), (x, y + 1), (x + 1, y + 1)]
        if all(c in W and test(c) for c in corners):
            left, top = px((x, y + 1))
            rows.append(
                f'<rect x="{left}" y="{top}" width="{cell}" height="{cell}" fill="#dddddd"/>'
            )

    for x, y in members:
        for q in ((x + 1, y), (x, y + 1)):
            if q in W and test(q):
                (x1, y1), (x2, y2) = px((x, y)), px(q)
                stroke = 3 if ((x, y), q) in bold else 1
                colour = "black" if stroke == 3 else "#888888"
                rows.append(
                    f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" '
                    f'stroke="{colour}" stroke-width="{stroke}"/>'
                )

    for p in W.cells():
        cx, cy = px(p)
        fill = "black" if test(p) else "white"
        rows.append(f'<circle cx="{cx}" cy="{cy}" r="{cell // 8}" fill="{fill}" stroke="black"/>')

    if certificate is not None:
        if certificate.window.dim != 2:
            raise usage_error("certificate is not two-dimensional")
        drawn = 0
        for (x, y), value in certificate.current.canonical():
            if value == 0 or x not in W or y not in W:
                continue
            head, tail = (y, x) if value > 0 else (x, y)
            (x1, y1), (x2, y2) = px(tail), px(head)
            # shorten so the arrow sits between the two dots
            dx, dy = (x2 - x1) // 4, (y2 - y1) // 4
            rows.append(
                f'<line x1="{x1 + dx}" y1="{y1 + dy}" x2="{x2 - dx}" y2="{y2 - dy}" '
                'stroke="#b00000" stroke-width="1.5" marker-end="url(#arrow)"/>'
            )
            drawn += 1
        logger.debug("drew %d current arrows", drawn)

    rows.append("</svg>")
    return "\n".join(rows) + "\n"
