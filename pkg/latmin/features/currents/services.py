import hashlib
import logging
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from latmin.core.errors import usage_error
from latmin.features.currents.models import Certificate, Current, Refutation
from latmin.features.currents.schemas import ForcedConstraints, RadiusReport, Verdict
from latmin.features.energy.models import VertexFunction
from latmin.features.energy.services import perimeter
from latmin.features.lattice.models import Edge, Point, VertexSet, Window, window_edges
from latmin.features.lattice.schemas import PatternOracle
from latmin.features.lattice.services import neighbors, require_dim
from latmin.features.mincut.models import FlowNetwork
from latmin.features.mincut.services import infinite_capacity, least_perimeter_solve
from latmin.shared.pool import ordered_map

logger = logging.getLogger(__name__)


def _sgn(v: Fraction) -> int:
    return (v > 0) - (v < 0)


# -------- Constraints --------
def forced_constraints(f: VertexFunction, omega: Optional[Window] = None) -> ForcedConstraints:
    omega = omega or f.window
    forced: Dict[Edge, int] = {}
    free: List[Edge] = []
    for x, y in window_edges(omega):
        s = _sgn(f(x) - f(y))
        if s:
            forced[(x, y)] = s
        else:
            free.append((x, y))
    return ForcedConstraints(forced=forced, free=free)


def one_laplacian_interval(
    f: VertexFunction, x: Point, omega: Optional[Window] = None
) -> Tuple[int, int]:
    """Δ₁f(x) as the interval [S − F, S + F]."""
    omega = omega or f.window
    if x not in omega:
        raise usage_error(f"{x} is not inside {omega}")
    total, free = 0, 0
    for y in neighbors(x):
        s = _sgn(f(x) - f(y))
        if s:
            total += s
        else:
            free += 1
    return total - free, total + free


# -------- Feasibility --------
def find_minimal_current(
    f: VertexFunction, omega: Optional[Window] = None, pattern_id: str = "anonymous"
) -> Optional[Certificate]:
    """Divergence-free current within the Sgn constraints, or None when infeasible.

    Free edges carry unit arcs both ways; each vertex of Ω gets its forced
    imbalance as a supply or demand arc; ring vertices are tied to a ground
    node whose demand balances Ω.
    """
    omega = omega or f.window
    constraints = forced_constraints(f, omega)
    cells = omega.closure_cells()
    index = {p: i for i, p in enumerate(cells)}
    source, sink, ground = len(cells), len(cells) + 1, len(cells) + 2
    network = FlowNetwork(len(cells) + 3)
    inf = infinite_capacity(omega)

    demand = {x: 0 for x in omega.cells()}
    for (x, y), s in constraints.forced.items():
        if x in demand:
            demand[x] -= s
        if y in demand:
            demand[y] += s

    arcs = {edge: network.add_arc(index[edge[0]], index[edge[1]], 1, 1) for edge in constraints.free}
    supply = 0
    for x, b in demand.items():
        if b > 0:
            network.add_arc(source, index[x], b)
            supply += b
        elif b < 0:
            network.add_arc(index[x], sink, -b)
    for z in omega.ring():
        network.add_arc(index[z], ground, inf, inf)
    balance = sum(demand.values())
    if balance > 0:
        network.add_arc(ground, sink, balance)
    elif balance < 0:
        network.add_arc(source, ground, -balance)
        supply -= balance

    flow = network.max_flow(source, sink)
    if flow != supply:
        logger.debug("no minimal current on %s: flow %d < supply %d", omega, flow, supply)
        return None

    labels: Dict[Edge, int] = dict(constraints.forced)
    for edge, arc in arcs.items():
        labels[edge] = network.flow(arc)
    current = Current.from_canonical(omega, {e: labels[e] for e in window_edges(omega)})
    return Certificate(pattern_id=pattern_id, window=omega, current=current)


# -------- Radius sweep --------
def _pattern_name(A: PatternOracle) -> str:
    return A.id or "anonymous"


def certify_at_radius(A: PatternOracle, center: Point, r: int) -> Verdict:
    window = Window.ball(center, r)
    require_dim(A, window)
    K = VertexSet.from_pattern(A, window)
    f = VertexFunction.indicator(K)
    certificate = find_minimal_current(f, window, _pattern_name(A))
    if certificate is not None:
        return certificate
    cut = least_perimeter_solve(window, K)
    current = perimeter(K)
    if cut.value >= current:
        logger.error("infeasible current but no cheaper competitor at r=%d", r)
    return Refutation(
        pattern_id=_pattern_name(A),
        radius=r,
        center=tuple(center),
        witness=cut.K_opt,
        witness_perimeter=cut.value,
        pattern_perimeter=current,
    )


def certify_up_to_radius(A: PatternOracle, center: Point, r_max: int) -> RadiusReport:
    if r_max < 1:
        raise usage_error("r_max must be at least 1")
    center = tuple(center)
    results = ordered_map(lambda r: certify_at_radius(A, center, r), range(1, r_max + 1))
    report = RadiusReport(pattern_id=_pattern_name(A), center=center, r_max=r_max, results=results)
    logger.info("%s: %s", report.pattern_id, report.summary())
    return report


# -------- Independent validation --------
def validate_certificate(c: Certificate, A: PatternOracle) -> bool:
    """Re-check a certificate from its definition, without any solver."""
    window = c.window
    if A.dim != window.dim:
        return False
    test = A.predicate()
    values = c.current.values
    edges = window_edges(window)
    if len(values) != 2 * len(edges):
        logger.info("certificate labels %d directed edges, expected %d", len(values), 2 * len(edges))
        return False
    for x, y in edges:
        forward, backward = values.get((x, y)), values.get((y, x))
        if forward is None or backward is None or forward != -backward:
            logger.info("antisymmetry fails on %s-%s", x, y)
            return False
        if not -1 <= forward <= 1:
            return False
        s = int(test(x)) - int(test(y))
        if s and forward != s:
            logger.info("Sgn constraint fails on %s-%s", x, y)
            return False
    for x in window.cells():
        if sum(values[(x, y)] for y in neighbors(x)) != 0:
            logger.info("nonzero divergence at %s", x)
            return False
    if c.digest is not None and c.digest != certificate_digest(c):
        logger.info("certificate hash mismatch")
        return False
    return True


# -------- CERT files --------
def _body_lines(c: Certificate) -> List[str]:
    if c.radius is None or c.center is None:
        raise usage_error("CERT files hold certificates on ∞-balls only")
    lines = [f"CERT {c.window.dim} {c.radius} " + " ".join(map(str, c.center))]
    lines.append(f"PATTERN {c.pattern_id}")
    for (x, y), v in c.current.canonical():
        for a, b, w in ((x, y, v), (y, x, -v)):
            lines.append(" ".join(map(str, a + b)) + f" {w}")
    return lines


def certificate_digest(c: Certificate) -> str:
    return hashlib.sha256("\n".join(_body_lines(c)).encode()).hexdigest()


def dump_certificate(c: Certificate) -> str:
    lines = _body_lines(c)
    lines.append(f"HASH {hashlib.sha256(chr(10).join(lines).encode()).hexdigest()}")
    return "\n".join(lines) + "\n"


def parse_certificate(text: str) -> Certificate:
    lines = text.strip().splitlines()
    try:
        head = lines[0].split()
        if head[0] != "CERT":
            raise ValueError("missing CERT header")
        dim, r = int(head[1]), int(head[2])
        center = tuple(int(tok) for tok in head[3:3 + dim])
        if len(center) != dim:
            raise ValueError("short center")
        kind, pattern_id = lines[1].split(maxsplit=1)
        if kind != "PATTERN":
            raise ValueError("missing PATTERN line")
        hash_kind, digest = lines[-1].split()
        if hash_kind != "HASH":
            raise ValueError("missing HASH line")
        values: Dict[Tuple[Point, Point], Fraction] = {}
        for line in lines[2:-1]:
            tokens = line.split()
            if len(tokens) != 2 * dim + 1:
                raise ValueError(f"bad edge line {line!r}")
            coords = [int(tok) for tok in tokens[:-1]]
            values[(tuple(coords[:dim]), tuple(coords[dim:]))] = Fraction(tokens[-1])
    except (IndexError, ValueError) as exc:
        raise usage_error(f"malformed certificate: {exc}") from exc
    window = Window.ball(center, r)
    return Certificate(
        pattern_id=pattern_id, window=window, current=Current(window, values), digest=digest
    )
