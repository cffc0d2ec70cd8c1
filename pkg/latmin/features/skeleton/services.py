import logging
import random
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterator, List, Optional, Sequence, Set, Tuple

import networkx as nx

from latmin.core.errors import EXIT_REFUTED, LatminError, usage_error
from latmin.features.currents.models import Certificate
from latmin.features.currents.services import (
    certify_up_to_radius,
    find_minimal_current,
    one_laplacian_interval,
    validate_certificate,
)
from latmin.features.energy.models import VertexFunction
from latmin.features.lattice.models import Point, VertexSet, Window
from latmin.features.lattice.schemas import PatternOracle, cube_offsets
from latmin.features.lattice.services import neighbors
from latmin.features.mincut.services import least_perimeter_solve
from latmin.features.skeleton.models import SkeletonView, skeleton_union
from latmin.features.skeleton.schemas import (
    DecayPoint,
    DecaySeries,
    ObstructionWitness,
    RoughIsometryStats,
    SkeletonReductionReport,
)
from latmin.shared.pool import ordered_map

logger = logging.getLogger(__name__)


# -------- Skeleta --------
def k_skeleton(A: PatternOracle, k: int, W: Window) -> VertexSet:
    """Mᵏ on the closure of W; cubes across the window edge are read from the oracle."""
    if W.dim != A.dim:
        raise usage_error(f"window is {W.dim}-dimensional, pattern is {A.dim}-dimensional")
    view = SkeletonView(A, k)
    test = view.pattern.predicate()
    return VertexSet(W, (p for p in W.closure_cells() if test(p)), view.pattern)


def _in_cube(p: Point, k: int, test: Callable[[Point], bool]) -> bool:
    for corners in cube_offsets(len(p), k):
        if all(test(tuple(a + b for a, b in zip(p, c))) for c in corners):
            return True
    return False


@lru_cache(maxsize=8)
def c1_bound(n: int) -> int:
    """Smallest r with (1 + 1/2n)^r > (2r + 1)^n."""
    base = Fraction(2 * n + 1, 2 * n)
    r = 1
    while base**r <= (2 * r + 1) ** n:
        r += 1
    return r


# -------- Skeleton reduction in Z³ --------
def m3_obstructions(A: PatternOracle, W: Window) -> List[Point]:
    """Vertices of W where the local test 0 ∈ Δ₁(1_{M³}) fails."""
    M3 = k_skeleton(A, 3, W)
    f = VertexFunction.indicator(M3)
    found = []
    for x in W.cells():
        lo, hi = one_laplacian_interval(f, x)
        if not lo <= 0 <= hi:
            found.append(x)
    return found


def check_skeleton_reduction_3d(
    A: PatternOracle, r_max: int, center: Optional[Point] = None
) -> SkeletonReductionReport:
    """Certify M³ ∪ M² and check that one current serves both M and M³ ∪ M².

    The shared current is found for f = 1_M + 1_{M³∪M²}, whose sign
    constraints are those of both indicators at once.
    """
    if A.dim != 3:
        raise usage_error("skeleton reduction is stated for Z³ patterns")
    center = tuple(center or (0, 0, 0))
    base = certify_up_to_radius(A, center, r_max)
    if not base.certified:
        raise LatminError(
            exit_code=EXIT_REFUTED,
            detail=f"{base.pattern_id} is not certified ({base.summary()}); refusing reduction",
        )
    reduced_pattern = skeleton_union(A, (3, 2))
    reduced = certify_up_to_radius(reduced_pattern, center, r_max)

    window = Window.ball(center, r_max)
    M = VertexSet.from_pattern(A, window)
    M32 = VertexSet.from_pattern(reduced_pattern, window)
    f = VertexFunction(window, {p: int(p in M) + int(p in M32) for p in window.closure_cells()})
    shared = find_minimal_current(f, window, reduced_pattern.id or "reduced")
    restriction_valid = False
    if shared is not None:
        as_base = Certificate(pattern_id=base.pattern_id, window=window, current=shared.current)
        restriction_valid = validate_certificate(shared, reduced_pattern) and validate_certificate(
            as_base, A
        )

    report = SkeletonReductionReport(
        pattern_id=base.pattern_id,
        r_max=r_max,
        base=base,
        reduced=reduced,
        restriction_valid=restriction_valid,
        m3_obstructions=m3_obstructions(A, window),
    )
    logger.info(
        "%s: reduction %s, %d M³ obstructions",
        report.pattern_id,
        "passes" if report.passed else "fails",
        len(report.m3_obstructions),
    )
    return report


def _random_quadric(rng: random.Random, n: int) -> Callable[[Point], bool]:
    quad = [[rng.randint(-1, 1) for _ in range(n)] for _ in range(n)]
    lin = [rng.randint(-2, 2) for _ in range(n)]
    const = rng.randint(-2, 2)

    def inside(p: Point) -> bool:
        q = sum(quad[i][j] * p[i] * p[j] for i in range(n) for j in range(n))
        return q + sum(a * b for a, b in zip(lin, p)) + const >= 0

    return inside


def m3_failure(K: VertexSet, inner: Window) -> Optional[Tuple[Point, Tuple[int, int]]]:
    """First vertex of ``inner`` where 0 ∉ Δ₁(1_{K³}), with its interval.

    Cubes are read from K's members only, so ``inner`` must sit two steps
    inside K's window.
    """
    test = K.members.__contains__
    cubed = VertexSet(K.window, (p for p in K.window.closure_cells() if _in_cube(p, 3, test)))
    f = VertexFunction.indicator(cubed)
    for x in inner.cells():
        lo, hi = one_laplacian_interval(f, x)
        if not lo <= 0 <= hi:
            return x, (lo, hi)
    return None


def search_m3_obstruction(
    radius: int = 2,
    budget: int = 2000,
    seed: int = 0,
    seeds: Sequence[PatternOracle] = (),
) -> Optional[ObstructionWitness]:
    """Seeded search for a Z³ window minimizer whose 3-skeleton fails the local test.

    The traces of ``seeds`` on τB̂_r are tried first, then traces cut out by
    random quadrics; each trace is filled by its smallest and largest
    least-perimeter sets. Every vertex of B̂_{r-2} is tested, members of K³
    and non-members alike.
    """
    if radius < 2:
        raise usage_error("the centre's cubes need radius at least 2")
    window = Window.ball((0, 0, 0), radius)
    inner = Window.ball((0, 0, 0), radius - 2)
    ring = window.ring()
    rng = random.Random(seed)

    def traces() -> Iterator[Callable[[Point], bool]]:
        for pattern in seeds:
            if pattern.dim != 3:
                raise usage_error(f"{pattern.id} is not a Z³ pattern")
            yield pattern.predicate()
        while True:
            yield _random_quadric(rng, 3)

    for trial, inside in zip(range(1, budget + 1), traces()):
        ones = [p for p in ring if inside(p)]
        smallest = least_perimeter_solve(window, ones).K_opt
        rest = [p for p in ring if not inside(p)]
        largest = least_perimeter_solve(window, rest).K_opt.complement()
        for K in (smallest, largest):
            failure = m3_failure(K, inner)
            if failure is None:
                continue
            x, interval = failure
            logger.info("M³ obstruction at %s after %d trials", x, trial)
            return ObstructionWitness(members=K, center=x, interval=interval, seed=seed, trials=trial)
    logger.info("no M³ obstruction in %d trials", budget)
    return None


# -------- Rough isometry --------
def _ratio(a: int, b: int) -> Optional[Fraction]:
    return Fraction(a, b) if b else None


def rough_isometry_stats(A: PatternOracle, center: Point, r: int) -> RoughIsometryStats:
    n = A.dim
    center = tuple(center)
    window = Window.ball(center, r)
    test = A.predicate()
    top = SkeletonView(A, n).pattern.predicate()

    M = [p for p in window.cells() if test(p)]
    Mn = [p for p in M if top(p)]
    bdy = [p for p in M if any(not test(q) for q in neighbors(p))]
    bdy_n = [p for p in Mn if any(not top(q) for q in neighbors(p))]

    fringe = [p for p in M if not top(p)]
    near_fringe: Set[Point] = set()
    for p in fringe:
        near_fringe.update(q for q in neighbors(p) if q in window and top(q))

    # intrinsic distance to Mⁿ inside the doubled window
    outer = window.dilate(r)
    graph = nx.Graph()
    for p in outer.cells():
        if test(p):
            graph.add_node(p)
            graph.add_edges_from((p, q) for q in neighbors(p) if q in outer and test(q))
    sources = [p for p in graph.nodes if top(p)]
    max_dist: Optional[int] = None
    if sources and M:
        lengths = nx.multi_source_dijkstra_path_length(graph, sources)
        if all(p in lengths for p in M):
            max_dist = max(lengths[p] for p in M)

    stats = RoughIsometryStats(
        pattern_id=A.id or "anonymous",
        center=center,
        radius=r,
        dim=n,
        vol_ratio=_ratio(len(Mn), len(M)),
        bdy_ratio=_ratio(len(bdy_n), len(bdy)),
        max_skeleton_dist=max_dist,
        c1_bound=c1_bound(n),
        fringe_size=len(fringe),
        fringe_bound=2 * n * len(near_fringe),
        skeleton_empty=not Mn,
    )
    if stats.skeleton_empty and M:
        logger.warning("%s: Mⁿ misses B̂_%d; a certified pattern cannot do this", stats.pattern_id, r)
    return stats


# -------- Isoperimetric decay --------
def _decay_point(A: PatternOracle, center: Point, r: int) -> DecayPoint:
    window = Window.ball(center, r)
    top = SkeletonView(A, A.dim).pattern.predicate()
    graph = nx.Graph()
    for p in window.cells():
        if top(p):
            graph.add_node(p)
            graph.add_edges_from((p, q) for q in neighbors(p) if q in window and top(q))
    best: Optional[Fraction] = None
    finite = 0
    components = list(nx.connected_components(graph))
    for part in components:
        boundary = sum(1 for p in part if any(q not in part for q in neighbors(p)))
        ratio = Fraction(boundary, len(part))
        if best is None or ratio < best:
            best = ratio
        rim = any(any(q not in window and top(q) for q in neighbors(p)) for p in part)
        if not rim:
            finite += 1
    return DecayPoint(radius=r, ratio=best, components=len(components), finite_components=finite)


def isoperimetric_decay(A: PatternOracle, center: Point, r_max: int) -> DecaySeries:
    """min over components A′ of Mⁿ ∩ B̂_r of |δA′|/|A′|, for r = 1..r_max."""
    if r_max < 1:
        raise usage_error("r_max must be at least 1")
    center = tuple(center)
    points = ordered_map(lambda r: _decay_point(A, center, r), range(1, r_max + 1))
    series = DecaySeries(pattern_id=A.id or "anonymous", center=center, points=points)
    if series.flagged:
        logger.warning("%s: finite components of Mⁿ inside the window", series.pattern_id)
    return series
