import logging
from typing import Iterable, List, Optional, Tuple

from pydantic import ValidationError

from latmin.core.errors import LatminError, usage_error
from latmin.features.lattice.models import Edge, Point, VertexSet, Window, shift, window_edges
from latmin.features.lattice.schemas import PatternOracle

logger = logging.getLogger(__name__)


# -------- Adjacency --------
def neighbors(p: Point, n: Optional[int] = None) -> List[Point]:
    """The 2n lattice neighbours of p, ordered −e₁, +e₁, …, −eₙ, +eₙ."""
    n = len(p) if n is None else n
    if n != len(p):
        raise usage_error(f"point {p} is not in Z^{n}")
    out = []
    for axis in range(n):
        out.append(shift(p, axis, -1))
        out.append(shift(p, axis, 1))
    return out


# -------- Boundary operators --------
def vertex_boundary(A: VertexSet, window: Optional[Window] = None) -> VertexSet:
    """δA clipped to the window: members with a non-member neighbour."""
    window = window or A.window
    found = []
    for x in window.cells():
        if x in A and any(y not in A for y in neighbors(x)):
            found.append(x)
    return VertexSet(window, found)


def exterior_boundary(A: VertexSet, window: Optional[Window] = None) -> VertexSet:
    """τA clipped to the window: non-members with a member neighbour."""
    window = window or A.window
    found = []
    for z in window.cells():
        if z not in A and any(w in A for w in neighbors(z)):
            found.append(z)
    return VertexSet(window, found)


def edge_sets(A: VertexSet, U: Optional[Window] = None) -> Tuple[List[Edge], List[Edge]]:
    """(∂A ∩ E_U, E_U), both in canonical edge order."""
    U = U or A.window
    edges = window_edges(U)
    cut = [(x, y) for x, y in edges if (x in A) != (y in A)]
    return cut, edges


def cut_size(members: Iterable[Point], U: Window) -> int:
    """|∂K ∩ E_U| for an explicit member set on the closure of U."""
    inside = frozenset(members)
    return sum(1 for x, y in window_edges(U) if (x in inside) != (y in inside))


# -------- GRID2 --------
def parse_grid2(text: str, window: Optional[Window] = None) -> VertexSet:
    """Read a Z² set; without ``window`` the grid box is taken as the closure."""
    lines = [line.rstrip("\n") for line in text.strip().splitlines()]
    if not lines or not lines[0].startswith("GRID2"):
        raise usage_error("GRID2 header missing")
    try:
        x0, y0, w, h = (int(tok) for tok in lines[0].split()[1:5])
    except ValueError as exc:
        raise usage_error(f"bad GRID2 header: {lines[0]!r}") from exc
    rows = lines[1:]
    if len(rows) != h or any(len(row) != w for row in rows):
        raise usage_error(f"GRID2 body does not match {w}x{h}")
    members = []
    for k, row in enumerate(rows):
        y = y0 + h - 1 - k
        for i, ch in enumerate(row):
            if ch == "#":
                members.append((x0 + i, y))
            elif ch != ".":
                raise usage_error(f"GRID2 cell {ch!r} is neither '#' nor '.'")
    if window is None:
        if w < 3 or h < 3:
            raise usage_error("GRID2 box too small to hold a window and its ring")
        window = Window(lo=(x0 + 1, y0 + 1), hi=(x0 + w - 2, y0 + h - 2))
    box = Window(lo=(x0, y0), hi=(x0 + w - 1, y0 + h - 1))
    missing = [p for p in window.closure_cells() if p not in box]
    if missing:
        raise usage_error(f"GRID2 box does not cover the closure of {window}; e.g. {missing[0]}")
    return VertexSet(window, members)


def dump_grid2(K: VertexSet) -> str:
    if K.dim != 2:
        raise usage_error("GRID2 holds Z² sets only")
    box = K.window.dilate(1)
    (x0, y0), (x1, y1) = box.lo, box.hi
    lines = [f"GRID2 {x0} {y0} {x1 - x0 + 1} {y1 - y0 + 1}"]
    for y in range(y1, y0 - 1, -1):
        lines.append("".join("#" if (x, y) in K.members else "." for x in range(x0, x1 + 1)))
    return "\n".join(lines) + "\n"


# -------- Pattern files --------
def load_pattern(text: str) -> PatternOracle:
    try:
        pattern = PatternOracle.model_validate_json(text)
    except ValidationError as exc:
        raise usage_error(f"invalid pattern document: {exc.errors()[0]['msg']}") from exc
    logger.debug("loaded pattern %s (dim %d)", pattern.id, pattern.dim)
    return pattern


def dump_pattern(pattern: PatternOracle) -> str:
    return pattern.model_dump_json(indent=2) + "\n"


def require_dim(pattern: PatternOracle, window: Window) -> None:
    if pattern.dim != window.dim:
        raise LatminError(
            exit_code=2,
            detail=f"pattern is {pattern.dim}-dimensional but the window is {window.dim}-dimensional",
        )
