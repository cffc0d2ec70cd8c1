import logging
from fractions import Fraction
from typing import Optional

from latmin.core.errors import usage_error
from latmin.features.energy.models import Number, VertexFunction
from latmin.features.energy.schemas import CoareaResult
from latmin.features.lattice.models import VertexSet, Window, window_edges
from latmin.features.lattice.services import cut_size, edge_sets

logger = logging.getLogger(__name__)


def _check_domain(f: VertexFunction, U: Window) -> None:
    if not all(f.window.in_closure(p) for p in U.closure_cells()):
        raise usage_error(f"function on {f.window} is partial on the closure of {U}")


def dirichlet_energy(f: VertexFunction, U: Optional[Window] = None) -> Fraction:
    """J_U(f): Σ |f(y) − f(x)| over the undirected edges of E_U."""
    U = U or f.window
    _check_domain(f, U)
    values = f.values
    return sum((abs(values[y] - values[x]) for x, y in window_edges(U)), Fraction(0))


def perimeter(K: VertexSet, U: Optional[Window] = None) -> int:
    """|∂K ∩ E_U|."""
    if U is None or U == K.window:
        return cut_size(K.members, K.window)
    cut, _ = edge_sets(K, U)
    return len(cut)


def superlevel(f: VertexFunction, t: Number) -> VertexSet:
    """Strict superlevel set {f > t}."""
    return VertexSet(f.window, (p for p, v in f.values.items() if v > t))


def coarea_check(f: VertexFunction, U: Optional[Window] = None) -> CoareaResult:
    U = U or f.window
    lhs = dirichlet_energy(f, U)
    levels = sorted({f.values[p] for p in U.closure_cells()})
    rhs = Fraction(0)
    for low, high in zip(levels, levels[1:]):
        rhs += (high - low) * perimeter(superlevel(f, low), U)
    if lhs != rhs:
        logger.error("co-area mismatch on %s: %s != %s", U, lhs, rhs)
    return CoareaResult(lhs=lhs, rhs=rhs, equal=lhs == rhs)


# -------- FUNC2 --------
def parse_func2(text: str) -> VertexFunction:
    """Header ``FUNC2 x0 y0 w h`` covering the window closure box, top row first."""
    tokens = text.split()
    if not tokens or tokens[0] != "FUNC2":
        raise usage_error("FUNC2 header missing")
    try:
        x0, y0, w, h = (int(tok) for tok in tokens[1:5])
        body = [Fraction(tok) for tok in tokens[5:]]
    except (ValueError, ZeroDivisionError) as exc:
        raise usage_error(f"bad FUNC2 content: {exc}") from exc
    if len(body) != w * h:
        raise usage_error(f"FUNC2 expects {w * h} values, got {len(body)}")
    if w < 3 or h < 3:
        raise usage_error("FUNC2 box too small to hold a window and its ring")
    values = {}
    for k in range(h):
        y = y0 + h - 1 - k
        for i in range(w):
            values[(x0 + i, y)] = body[k * w + i]
    window = Window(lo=(x0 + 1, y0 + 1), hi=(x0 + w - 2, y0 + h - 2))
    return VertexFunction(window, values)


def dump_func2(f: VertexFunction) -> str:
    if f.window.dim != 2:
        raise usage_error("FUNC2 holds Z² functions only")
    box = f.window.dilate(1)
    (x0, y0), (x1, y1) = box.lo, box.hi
    lines = [f"FUNC2 {x0} {y0} {x1 - x0 + 1} {y1 - y0 + 1}"]
    for y in range(y1, y0 - 1, -1):
        row = []
        for x in range(x0, x1 + 1):
            v = f.values.get((x, y), Fraction(0))
            row.append(f"{v.numerator}/{v.denominator}")
        lines.append(" ".join(row))
    return "\n".join(lines) + "\n"
