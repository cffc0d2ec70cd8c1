import logging
from typing import FrozenSet, Iterable, Mapping, Union

from latmin.core.config import settings
from latmin.core.errors import LatminError, usage_error
from latmin.features.lattice.models import Point, VertexSet, Window, window_edges
from latmin.features.lattice.services import cut_size, neighbors
from latmin.features.mincut.models import FlowNetwork
from latmin.features.mincut.schemas import BruteForceResult, CutResult

logger = logging.getLogger(__name__)

Trace = Union[VertexSet, Mapping[Point, int], Iterable[Point]]


def boundary_ones(U: Window, phi: Trace) -> FrozenSet[Point]:
    """phi⁻¹(1) ⊆ τU from a set, a 0/1 mapping, or a VertexSet's trace."""
    if isinstance(phi, VertexSet):
        ones = frozenset(p for p in U.ring() if p in phi)
    elif isinstance(phi, Mapping):
        ones = frozenset(p for p, v in phi.items() if v)
    else:
        ones = frozenset(phi)
    ring = set(U.ring())
    stray = [p for p in ones if p not in ring]
    if stray:
        raise usage_error(f"boundary data at {stray[0]} is not on the ring of {U}")
    return ones


def infinite_capacity(U: Window) -> int:
    """Strictly above any cut through lattice edges."""
    return 4 * U.dim * U.size + 1


# -------- Min-cut solver --------
def least_perimeter_solve(U: Window, phi: Trace) -> CutResult:
    """Least-perimeter K with K ∩ τU = phi⁻¹(1); K is the residual source side."""
    ones = boundary_ones(U, phi)
    cells = U.closure_cells()
    index = {p: i for i, p in enumerate(cells)}
    source, sink = len(cells), len(cells) + 1
    network = FlowNetwork(len(cells) + 2)
    inf = infinite_capacity(U)

    for p in U.ring():
        if p in ones:
            network.add_arc(source, index[p], inf)
        else:
            network.add_arc(index[p], sink, inf)
    for x, y in window_edges(U):
        network.add_arc(index[x], index[y], 1, 1)

    value = network.max_flow(source, sink)
    side = network.reachable(source)
    K_opt = VertexSet(U, (p for p, i in index.items() if i in side))
    logger.debug("least perimeter on %s: %d", U, value)
    return CutResult(K_opt=K_opt, value=value)


def is_least_perimeter(K: VertexSet, U: Window | None = None) -> bool:
    U = U or K.window
    members = frozenset(p for p in U.closure_cells() if p in K)
    current = cut_size(members, U)
    best = least_perimeter_solve(U, members - frozenset(U.cells())).value
    return current == best


# -------- Exhaustive oracle --------
def brute_force_least_perimeter(U: Window, phi: Trace) -> BruteForceResult:
    """Minimum over all 2^|U| interior fillings, walked in Gray-code order."""
    limit = settings.BRUTE_FORCE_LIMIT
    if U.size > limit:
        raise LatminError(
            exit_code=2,
            detail=f"window of {U.size} cells exceeds the brute-force limit of {limit}",
        )
    ones = boundary_ones(U, phi)
    cells = U.cells()
    index = {p: i for i, p in enumerate(cells)}
    # per cell: interior neighbour indices and fixed boundary neighbour values
    inner = [[index[q] for q in neighbors(p) if q in index] for p in cells]
    outer = [[q in ones for q in neighbors(p) if q not in index] for p in cells]

    state = [False] * len(cells)
    value = cut_size(ones, U)
    best, optima = value, [0]
    mask = 0
    for step in range(1, 1 << len(cells)):
        j = (step & -step).bit_length() - 1
        here = state[j]
        delta = 0
        for k in inner[j]:
            delta += 1 if state[k] == here else -1
        for fixed in outer[j]:
            delta += 1 if fixed == here else -1
        state[j] = not here
        mask ^= 1 << j
        value += delta
        if value < best:
            best, optima = value, [mask]
        elif value == best:
            optima.append(mask)

    results = []
    for m in sorted(optima):
        chosen = [cells[i] for i in range(len(cells)) if m >> i & 1]
        results.append(VertexSet(U, list(ones) + chosen))
    return BruteForceResult(value=best, all_optima=results)
