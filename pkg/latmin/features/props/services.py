import logging
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from latmin.core.config import settings
from latmin.core.errors import usage_error
from latmin.features.catalog2d.services import classify_boundary
from latmin.features.currents.schemas import RadiusReport
from latmin.features.currents.services import certify_up_to_radius
from latmin.features.lattice.models import Point, Window
from latmin.features.lattice.schemas import PatternOracle, cube_offsets
from latmin.features.lattice.services import neighbors
from latmin.features.props.schemas import GrowthPoint, GrowthSeries, PropertyReport
from latmin.shared.pool import ordered_map

logger = logging.getLogger(__name__)


def _name(A: PatternOracle) -> str:
    return A.id or "anonymous"


def _report(A: PatternOracle, W: Window, property_id: str, verdict: str, **extra) -> PropertyReport:
    return PropertyReport(property_id=property_id, pattern_id=_name(A), window=W, verdict=verdict, **extra)


# -------- Degree --------
def check_min_degree(A: PatternOracle, W: Window) -> PropertyReport:
    """deg ≥ n on A ∩ W, and no edge joins two vertices of degree exactly n."""
    n = A.dim
    test = A.predicate()
    degree: Dict[Point, int] = {}
    for x in W.cells():
        if test(x):
            degree[x] = sum(1 for y in neighbors(x) if test(y))
    for x, d in degree.items():
        if d < n:
            return _report(A, W, "min-degree", "violated", witness={"vertex": x, "degree": d})
    for x, d in degree.items():
        if d != n:
            continue
        for y in neighbors(x):
            if test(y):
                dy = degree.get(y)
                if dy is None:
                    dy = sum(1 for z in neighbors(y) if test(z))
                if dy == n:
                    return _report(A, W, "min-degree", "violated", witness={"edge": (x, y), "degree": n})
    return _report(A, W, "min-degree", "holds")


# -------- Z² boundary shape --------
def _components(test: Callable[[Point], bool], W: Window) -> List[set]:
    graph = nx.Graph()
    for x in W.cells():
        if test(x):
            graph.add_node(x)
            graph.add_edges_from((x, y) for y in neighbors(x) if y in W and test(y))
    return [set(part) for part in nx.connected_components(graph)]


def check_convexity(A: PatternOracle, W: Window) -> PropertyReport:
    """Each component of A ∩ W meets every axis line in an interval."""
    if A.dim != 2:
        return _report(A, W, "convexity", "not-applicable", witness={"reason": "dim"})
    for part in sorted(_components(A.predicate(), W), key=min):
        lines: Dict[Tuple[int, int], List[int]] = {}
        for x, y in part:
            lines.setdefault((1, y), []).append(x)
            lines.setdefault((0, x), []).append(y)
        for (axis, c), coords in sorted(lines.items()):
            coords.sort()
            for a, b in zip(coords, coords[1:]):
                if b != a + 1:
                    gap = (a + 1, c) if axis == 1 else (c, a + 1)
                    return _report(
                        A, W, "convexity", "violated",
                        witness={"gap": gap, "component_size": len(part)},
                        surrogate="components taken inside the window",
                    )
    return _report(A, W, "convexity", "holds", surrogate="components taken inside the window")


def check_no_parallel_rays(A: PatternOracle, W: Window) -> PropertyReport:
    surrogate = "flat boundary runs spanning the window stand in for rays"
    if A.dim != 2:
        return _report(A, W, "no-parallel-rays", "not-applicable", witness={"reason": "dim"}, surrogate=surrogate)
    analysis = classify_boundary(A, W)
    width, height = W.shape
    long_runs: Dict[int, List[Tuple[Point, Point]]] = {0: [], 1: []}
    for start, end in analysis.flat_runs:
        axis = 0 if start[1] == end[1] else 1
        span = width if axis == 0 else height
        # at least len(W) - 2 vertices
        if end[axis] - start[axis] >= span - 3:
            long_runs[axis].append((start, end))
    for axis, runs in long_runs.items():
        for i, first in enumerate(runs):
            for second in runs[i + 1:]:
                if first[0][1 - axis] != second[0][1 - axis]:
                    return _report(
                        A, W, "no-parallel-rays", "violated",
                        witness={"runs": [first, second]}, surrogate=surrogate,
                    )
    return _report(A, W, "no-parallel-rays", "holds", surrogate=surrogate)


def check_boundary_structure(A: PatternOracle, W: Window) -> PropertyReport:
    """Boundary vertices have two boundary neighbours, isolated geodesic paths are
    shorter than 3, loops are unit squares and each component has at most one."""
    surrogate = "boundary read inside the window"
    if A.dim != 2:
        return _report(A, W, "boundary-structure", "not-applicable", witness={"reason": "dim"})
    analysis = classify_boundary(A, W)
    inner = W.dilate(-1) if min(W.shape) > 2 else W
    for x, d in analysis.degrees.items():
        if d < 2 and x in inner:
            return _report(A, W, "boundary-structure", "violated",
                           witness={"vertex": x, "boundary_degree": d}, surrogate=surrogate)
    for path in analysis.isolated_paths:
        if path.geodesic and path.length >= 3:
            return _report(A, W, "boundary-structure", "violated",
                           witness={"path": tuple(path.vertices), "length": path.length},
                           surrogate=surrogate)
    squares = analysis.unit_square_loops
    for loop in analysis.loops:
        if loop not in squares:
            return _report(A, W, "boundary-structure", "violated",
                           witness={"loop": tuple(loop)}, surrogate=surrogate)
    if len(squares) > analysis.components:
        return _report(A, W, "boundary-structure", "violated",
                       witness={"loops": len(squares), "components": analysis.components},
                       surrogate=surrogate)
    return _report(A, W, "boundary-structure", "holds", surrogate=surrogate)


# -------- Maximum principle --------
def _lift(q: Sequence[int], i: int, t: int) -> Point:
    return tuple(q[:i]) + (t,) + tuple(q[i:])


def _column_extent(
    test: Callable[[Point], bool], q: Sequence[int], i: int, W: Window
) -> Tuple[Optional[float], Optional[float]]:
    """(h, H) of the column over q inside W; ±inf where A leaves W; None if empty."""
    lo, hi = W.lo[i], W.hi[i]
    hits = [t for t in range(lo, hi + 1) if test(_lift(q, i, t))]
    if not hits:
        return None, None
    top: float = hits[-1]
    bottom: float = hits[0]
    if hits[-1] == hi and test(_lift(q, i, hi + 1)):
        top = float("inf")
    if hits[0] == lo and test(_lift(q, i, lo - 1)):
        bottom = float("-inf")
    return bottom, top


def check_max_principle(
    A: PatternOracle, i: int, omega1: Iterable[Sequence[int]], W: Window
) -> PropertyReport:
    """Column heights over Ω₁ take their extremes on the collar Ω₂ − Ω₁ as well."""
    n = A.dim
    if n < 2:
        raise usage_error("the maximum principle needs n >= 2")
    if not 0 <= i < n:
        raise usage_error(f"axis {i} outside 0..{n - 1}")
    omega1 = {tuple(q) for q in omega1}
    if not omega1 or any(len(q) != n - 1 for q in omega1):
        raise usage_error(f"Ω₁ must be a nonempty set of points of Z^{n - 1}")
    base = "max-principle"
    cubes = cube_offsets(n - 1, n - 1)
    for q in omega1:
        if not any(all(tuple(a + b for a, b in zip(q, c)) in omega1 for c in cube) for cube in cubes):
            return _report(A, W, base, "not-applicable", witness={"reason": "realization", "point": q})
    collar = {tuple(p) for q in omega1 for p in neighbors(q) if tuple(p) not in omega1}
    test = A.predicate()
    extents = {q: _column_extent(test, q, i, W) for q in omega1 | collar}
    missing = sorted(q for q, (h, H) in extents.items() if H is None)
    if missing:
        return _report(A, W, base, "not-applicable", witness={"reason": "projection", "point": missing[0]})

    inside_top = max(extents[q][1] for q in omega1)
    inside_bottom = min(extents[q][0] for q in omega1)
    collar_top = max(extents[q][1] for q in collar)
    collar_bottom = min(extents[q][0] for q in collar)
    top_known = inside_top != float("inf") and collar_top != float("inf")
    bottom_known = inside_bottom != float("-inf") and collar_bottom != float("-inf")
    surrogate = "columns leaving the window count as unbounded"
    if not top_known and not bottom_known:
        return _report(A, W, base, "not-applicable", witness={"reason": "unbounded"}, surrogate=surrogate)
    if top_known and collar_top < inside_top:
        peak = min(q for q in omega1 if extents[q][1] == inside_top)
        return _report(A, W, base, "violated",
                       witness={"clause": "max", "column": peak, "H": int(inside_top), "collar": int(collar_top)},
                       surrogate=surrogate)
    if bottom_known and collar_bottom > inside_bottom:
        pit = min(q for q in omega1 if extents[q][0] == inside_bottom)
        return _report(A, W, base, "violated",
                       witness={"clause": "min", "column": pit, "h": int(inside_bottom), "collar": int(collar_bottom)},
                       surrogate=surrogate)
    return _report(A, W, base, "holds", surrogate=surrogate)


# -------- Slabs --------
def slab_axis(A: PatternOracle, W: Window) -> Optional[int]:
    """An axis along which A ∩ W stays off both faces of W, if any."""
    test = A.predicate()
    members = [x for x in W.cells() if test(x)]
    if not members:
        return None
    for axis in range(A.dim):
        coords = [x[axis] for x in members]
        if min(coords) > W.lo[axis] and max(coords) < W.hi[axis]:
            return axis
    return None


def check_slab_refutation(
    A: PatternOracle, r_budget: int, center: Optional[Point] = None
) -> PropertyReport:
    """A pattern squeezed between two parallel hyperplanes must be refuted."""
    center = tuple(center or (0,) * A.dim)
    W = Window.ball(center, r_budget)
    surrogate = "axis-parallel slabs detected inside the window"
    axis = slab_axis(A, W)
    if axis is None:
        return _report(A, W, "slab-refutation", "not-applicable", surrogate=surrogate)
    report = certify_up_to_radius(A, center, r_budget)
    if report.certified:
        return _report(A, W, "slab-refutation", "violated",
                       witness={"axis": axis, "certified_to": r_budget}, surrogate=surrogate)
    return _report(A, W, "slab-refutation", "holds", witness={"axis": axis},
                   surrogate=surrogate, refuted_at=report.refuted_at)


# -------- Growth --------
def growth_bound(n: int, r: int) -> int:
    return 4 * n * n * (2 * r + 1) ** (n - 1)


def _growth_point(A: PatternOracle, center: Point, r: int) -> GrowthPoint:
    test = A.predicate()
    W = Window.ball(center, r)
    volume = boundary = 0
    for x in W.cells():
        if test(x):
            volume += 1
            if any(not test(y) for y in neighbors(x)):
                boundary += 1
    return GrowthPoint(radius=r, boundary=boundary, volume=volume, bound=growth_bound(A.dim, r))


def growth_report(A: PatternOracle, center: Point, r_max: int) -> GrowthSeries:
    if r_max < 1:
        raise usage_error("r_max must be at least 1")
    center = tuple(center)
    points = ordered_map(lambda r: _growth_point(A, center, r), range(1, r_max + 1))
    series = GrowthSeries(pattern_id=_name(A), center=center, dim=A.dim, points=points)
    if not series.within_bound:
        logger.warning("%s: boundary growth exceeds 4n²(2r+1)^(n-1)", series.pattern_id)
    return series


# -------- Suite --------
CHECKERS: Dict[str, Callable[[PatternOracle, Window], PropertyReport]] = {
    "min-degree": check_min_degree,
    "convexity": check_convexity,
    "no-parallel-rays": check_no_parallel_rays,
    "boundary-structure": check_boundary_structure,
}


def run_all(
    A: PatternOracle,
    center: Point,
    radius: int,
    cross_check: bool = True,
    slab_budget: Optional[int] = None,
) -> List[PropertyReport]:
    """Every window checker on B̂_radius, then the slab test.

    With ``cross_check`` a violated verdict is paired with a certifier run so
    the report records whether the pattern is refuted as well.
    """
    center = tuple(center)
    W = Window.ball(center, radius)
    reports = ordered_map(lambda check: check(A, W), list(CHECKERS.values()))
    reports.append(check_slab_refutation(A, slab_budget or settings.DEFAULT_RADIUS, center))
    if cross_check and any(r.violated and r.property_id != "slab-refutation" for r in reports):
        sweep: RadiusReport = certify_up_to_radius(A, center, settings.DEFAULT_RADIUS)
        reports = [
            r.model_copy(update={"refuted_at": sweep.refuted_at}) if r.violated else r
            for r in reports
        ]
    return reports
