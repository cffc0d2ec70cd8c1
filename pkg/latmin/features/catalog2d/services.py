import logging
import random
from itertools import product
from typing import Callable, Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from latmin.core.config import settings
from latmin.core.errors import EXIT_REFUTED, EXIT_USAGE, LatminError, usage_error
from latmin.features.catalog2d.models import BoundaryAnalysis, Family, IsolatedPath, Params
from latmin.features.catalog2d.registry import FAMILIES
from latmin.features.catalog2d.schemas import CandidateReport, FamilyVerification
from latmin.features.currents.models import Certificate
from latmin.features.currents.services import certify_up_to_radius, validate_certificate
from latmin.features.lattice.models import Point, VertexSet, Window
from latmin.features.lattice.schemas import Cells, PatternOracle
from latmin.features.lattice.services import neighbors
from latmin.features.mincut.services import brute_force_least_perimeter, least_perimeter_solve
from latmin.shared.pool import ordered_map

logger = logging.getLogger(__name__)

Predicate = Callable[[Point], bool]

# the eight symmetries of the square
D4: Tuple[Callable[[Point], Point], ...] = (
    lambda p: (p[0], p[1]),
    lambda p: (-p[1], p[0]),
    lambda p: (-p[0], -p[1]),
    lambda p: (p[1], -p[0]),
    lambda p: (-p[0], p[1]),
    lambda p: (p[0], -p[1]),
    lambda p: (p[1], p[0]),
    lambda p: (-p[1], -p[0]),
)


# -------- Registry access --------
# default-member certificates, filled once per family and validated before use
_REGISTERED: Dict[str, Certificate] = {}


def list_families(connected: Optional[bool] = None) -> List[Family]:
    return [f for f in FAMILIES.values() if connected is None or f.connected == connected]


def get_family(family_id: str) -> Family:
    try:
        return FAMILIES[family_id]
    except KeyError:
        raise usage_error(f"unknown family {family_id!r}") from None


def _member(family: Family, params: Optional[Params], force: bool) -> Tuple[Params, PatternOracle]:
    resolved = family.resolve(params)
    unknown = sorted(set(params or {}) - set(family.parameters))
    if unknown:
        raise usage_error(f"{family.id} takes no parameter {unknown[0]!r}")
    if not family.constraint(resolved) and not force:
        raise LatminError(
            exit_code=EXIT_USAGE,
            detail=f"{family.id} rejects {resolved}: violates caption constraint {family.caption}",
        )
    suffix = ",".join(f"{k}={resolved[k]}" for k in family.parameters)
    name = f"{family.id}({suffix})" if suffix else family.id
    return resolved, PatternOracle(dim=2, expr=family.build(resolved), id=name)


def generate(family_id: str, params: Optional[Params] = None, force: bool = False) -> PatternOracle:
    """Pattern of a registered family member; parameters outside the caption need ``force``.

    A family is only served once its default member carries a validated
    certificate, see :func:`stored_certificate`.
    """
    family = get_family(family_id)
    _, pattern = _member(family, params, force)
    stored_certificate(family_id)
    return pattern


def family_center(family_id: str, params: Optional[Params] = None) -> Point:
    family = get_family(family_id)
    return family.anchor(family.resolve(params))


def verify_family(
    family_id: str,
    params: Optional[Params] = None,
    radius: Optional[int] = None,
    force: bool = False,
) -> FamilyVerification:
    family = get_family(family_id)
    resolved, pattern = _member(family, params, force)
    report = certify_up_to_radius(pattern, family.anchor(resolved), radius or settings.DEFAULT_RADIUS)
    certificate: Optional[Certificate] = None
    if report.certified:
        certificate = report.results[-1]
        if not validate_certificate(certificate, pattern):
            raise LatminError(exit_code=EXIT_REFUTED, detail=f"{pattern.id}: certificate failed validation")
    return FamilyVerification(
        family_id=family_id,
        pattern_id=pattern.id or family_id,
        params=resolved,
        in_constraint=family.constraint(resolved),
        reconstructed=family.reconstructed,
        report=report,
        certificate=certificate,
    )


def stored_certificate(family_id: str) -> Certificate:
    """Validated certificate of the default member to ``settings.CATALOG_RADIUS``.

    Computed once per family. A family whose member does not certify, or
    whose certificate does not validate, is refused with exit code 1.
    """
    if family_id in _REGISTERED:
        return _REGISTERED[family_id]
    verification = verify_family(family_id, radius=settings.CATALOG_RADIUS)
    if verification.certificate is None:
        raise LatminError(
            exit_code=EXIT_REFUTED,
            detail=f"{family_id} is not registrable: refuted at radius {verification.report.refuted_at}",
        )
    _REGISTERED[family_id] = verification.certificate
    logger.info("registered %s with a radius %d certificate", family_id, settings.CATALOG_RADIUS)
    return verification.certificate


def load_catalog(families: Optional[Iterable[str]] = None) -> Dict[str, Certificate]:
    """Certify every family (or the given ids) up front; the first failure aborts."""
    ids = list(families) if families is not None else list(FAMILIES)
    return {family_id: stored_certificate(family_id) for family_id in ids}


# -------- Boundary structure --------
def _squares_on(x: Point, y: Point, test: Predicate) -> int:
    """Unit squares inside the pattern that contain the edge x → y."""
    if x[1] == y[1]:
        corners = [(x[0], x[1] - 1), x]
    else:
        corners = [(x[0] - 1, x[1]), x]
    return sum(
        1
        for cx, cy in corners
        if test((cx, cy)) and test((cx + 1, cy)) and test((cx, cy + 1)) and test((cx + 1, cy + 1))
    )


def isolated_paths(test: Predicate, W: Window) -> List[IsolatedPath]:
    """Maximal paths whose inner vertices lie in W and have degree 2 in the pattern."""
    degree = {p: sum(1 for q in neighbors(p) if test(q)) for p in W.cells() if test(p)}
    runs = nx.Graph()
    for p, deg in degree.items():
        if deg != 2:
            continue
        runs.add_node(p)
        for q in neighbors(p):
            if degree.get(q) == 2:
                runs.add_edge(p, q)
    found = []
    for component in nx.connected_components(runs):
        run = runs.subgraph(component)
        starts = [p for p in run if run.degree(p) <= 1]
        if not starts:
            continue  # a cycle of degree-2 vertices
        inner = list(nx.dfs_preorder_nodes(run, min(starts)))
        head = [q for q in neighbors(inner[0]) if test(q) and q not in component]
        tail = [q for q in neighbors(inner[-1]) if test(q) and q not in component]
        if len(inner) == 1:
            head, tail = head[:1], head[1:]
        vertices = head[:1] + inner + tail[:1]
        length = len(vertices) - 1
        a, b = vertices[0], vertices[-1]
        span = abs(a[0] - b[0]) + abs(a[1] - b[1])
        found.append(IsolatedPath(vertices=vertices, length=length, geodesic=span == length))
    return sorted(found, key=lambda path: path.vertices)


def classify_boundary(A: PatternOracle, W: Window) -> BoundaryAnalysis:
    """Boundary graph of A seen through W.

    A boundary edge joins two pattern vertices and lies in at most one unit
    square of the pattern. Edges crossing the window edge are kept so that
    degrees of vertices on the rim are exact.
    """
    if A.dim != 2 or W.dim != 2:
        raise usage_error("boundary classification is defined on Z² only")
    test = A.predicate()
    graph = nx.Graph()
    squares: Dict[Tuple[Point, Point], int] = {}
    for x in W.cells():
        if not test(x):
            continue
        for step in ((1, 0), (0, 1), (-1, 0), (0, -1)):
            y = (x[0] + step[0], x[1] + step[1])
            if not test(y):
                continue
            edge = (x, y) if y > x else (y, x)
            if edge in squares or (y in W and step[0] + step[1] < 0):
                continue
            count = _squares_on(*edge, test)
            if count <= 1:
                squares[edge] = count
                graph.add_edge(*edge)

    vertices = sorted(p for p in graph.nodes if p in W)
    degrees = {p: graph.degree(p) for p in vertices}
    corners = []
    for p in vertices:
        nbrs = list(graph.neighbors(p))
        if len(nbrs) == 2 and nbrs[0][0] != nbrs[1][0] and nbrs[0][1] != nbrs[1][1]:
            corners.append(p)

    flat_runs = []
    for axis in (0, 1):
        step = (1, 0) if axis == 0 else (0, 1)
        for p in vertices:
            back = (p[0] - step[0], p[1] - step[1])
            if back in W and graph.has_edge(p, back):
                continue
            end = p
            while True:
                nxt = (end[0] + step[0], end[1] + step[1])
                if nxt not in W or not graph.has_edge(end, nxt):
                    break
                end = nxt
            if end != p:
                flat_runs.append((p, end))

    inner = graph.subgraph(vertices)
    loops = [sorted(cycle) for cycle in nx.cycle_basis(inner)]

    members = nx.Graph()
    for x in W.cells():
        if test(x):
            members.add_node(x)
            members.add_edges_from((x, q) for q in neighbors(x) if q in W and test(q))
    geodesic = True
    for part in nx.connected_components(inner):
        along = inner.subgraph(part)
        for p in sorted(part):
            on_boundary = nx.single_source_shortest_path_length(along, p)
            through = nx.single_source_shortest_path_length(members, p)
            if any(on_boundary[q] != through[q] for q in part):
                geodesic = False
                break
        if not geodesic:
            break

    return BoundaryAnalysis(
        window=W,
        boundary_vertices=vertices,
        degrees=degrees,
        boundary_edges=sorted(squares),
        corners=corners,
        flat_runs=sorted(flat_runs),
        loops=sorted(loops),
        components=nx.number_connected_components(inner),
        isolated_paths=isolated_paths(test, W),
        geodesic=geodesic,
        simple=all(d <= 2 for d in degrees.values()),
        oriented=all(count == 1 for count in squares.values()),
    )


# -------- Symmetry --------
def are_isomorphic(A: PatternOracle, B: PatternOracle, W: Window) -> bool:
    """True if a symmetry of the square then a shift of size ≤ diam(W) maps A onto B on W."""
    if A.dim != 2 or B.dim != 2 or W.dim != 2:
        raise usage_error("isomorphism test is defined on Z² only")
    cells = W.cells()
    test_a, test_b = A.predicate(), B.predicate()
    target = [test_b(p) for p in cells]
    diam = sum(W.shape) - 2
    for k, g in enumerate(D4):
        for tx, ty in product(range(-diam, diam + 1), repeat=2):
            if all(
                test_a(g((p[0] - tx, p[1] - ty))) == want for p, want in zip(cells, target)
            ):
                logger.debug("isomorphic via symmetry %d and shift (%d, %d)", k, tx, ty)
                return True
    return False


def canonical_form(members: Iterable[Point], center: Point) -> Tuple[Point, ...]:
    """Smallest sorted image of ``members`` under D4 about ``center``."""
    cx, cy = center
    offsets = [(x - cx, y - cy) for x, y in members]
    return min(tuple(sorted(g(p) for p in offsets)) for g in D4)


# -------- Enumeration --------
def local_form(members: FrozenSet[Point], x: Point) -> Optional[Tuple[Point, ...]]:
    """D4 class of the star of x in the set, or None unless x is a boundary vertex."""
    if x not in members:
        return None
    inside = [q for q in neighbors(x) if q in members]
    if len(inside) == 4:
        return None
    return canonical_form(inside, x)


def candidate_pattern(K: VertexSet) -> PatternOracle:
    """An explicit window set as a pattern; points off the closure are outside."""
    return PatternOracle(dim=K.dim, expr=Cells(points=[list(p) for p in sorted(K.members)]))


def _window_minimizers(window: Window, ones: List[Point], exhaustive: bool) -> List[VertexSet]:
    if exhaustive:
        return brute_force_least_perimeter(window, ones).all_optima
    # smallest and largest minimizer
    smallest = least_perimeter_solve(window, ones).K_opt
    rest = [p for p in window.ring() if p not in set(ones)]
    largest = least_perimeter_solve(window, rest).K_opt.complement()
    return [smallest] if largest == smallest else [smallest, largest]


def enumerate_candidates(
    r: int, budget: Optional[int] = None, seed: int = 0, center: Point = (0, 0)
) -> CandidateReport:
    """Least-perimeter fillings of B̂_r over its boundary traces, one per D4 class.

    Every filling returned minimizes perimeter for its trace, so it carries a
    minimal current on B̂_r. When 2^|τB̂_r| exceeds the budget a seeded sample
    of traces is walked and the report is marked partial. Radius 1 collects
    every optimum; larger radii keep the two extreme minimizers per trace.

    At radius 2 the ring has 20 vertices, so the default budget walks a
    sample and the report is partial; pass ``budget=1 << 20`` for the full
    walk. Candidates are deduplicated by their D4 canonical form on the
    window, which is finer than ``are_isomorphic`` on whole graphs.
    """
    if not 1 <= r <= settings.ENUMERATION_MAX_RADIUS:
        raise usage_error(f"enumeration radius must lie in 1..{settings.ENUMERATION_MAX_RADIUS}")
    budget = budget or settings.ENUMERATION_BUDGET
    window = Window.ball(center, r)
    ring = window.ring()
    total = 1 << len(ring)
    traces: Sequence[int]
    if total <= budget:
        traces, partial = range(total), False
    else:
        traces, partial = sorted(random.Random(seed).sample(range(total), budget)), True
        logger.warning("sampling %d of %d traces; enumeration is partial", budget, total)

    exhaustive = window.size <= 9

    def solve(mask: int) -> List[VertexSet]:
        ones = [ring[i] for i in range(len(ring)) if mask >> i & 1]
        return _window_minimizers(window, ones, exhaustive)

    seen: Dict[Tuple[Point, ...], VertexSet] = {}
    forms = set()
    for optima in ordered_map(solve, traces):
        for K in optima:
            seen.setdefault(canonical_form(K.members, center), K)
            form = local_form(K.members, center)
            if form is not None:
                forms.add(form)
    logger.info("radius %d: %d candidate classes, %d local forms", r, len(seen), len(forms))
    return CandidateReport(
        radius=r,
        traces_checked=len(traces),
        partial=partial,
        candidates=[seen[key] for key in sorted(seen)],
        local_forms=sorted(forms),
    )
