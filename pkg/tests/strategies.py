from fractions import Fraction
from typing import Optional

from hypothesis import strategies as st

from latmin.features.energy.models import VertexFunction
from latmin.features.lattice.models import VertexSet, Window


@st.composite
def windows(draw, dim: Optional[int] = None, max_cells: int = 12) -> Window:
    n = dim if dim is not None else draw(st.integers(min_value=1, max_value=2))
    while True:
        shape = [draw(st.integers(min_value=1, max_value=4)) for _ in range(n)]
        size = 1
        for side in shape:
            size *= side
        if size <= max_cells:
            break
    lo = [draw(st.integers(min_value=-3, max_value=3)) for _ in range(n)]
    return Window(lo=tuple(lo), hi=tuple(a + s - 1 for a, s in zip(lo, shape)))


@st.composite
def vertex_sets(draw, window: Optional[Window] = None, max_cells: int = 12) -> VertexSet:
    W = window if window is not None else draw(windows(max_cells=max_cells))
    cells = W.closure_cells()
    flags = draw(st.lists(st.booleans(), min_size=len(cells), max_size=len(cells)))
    return VertexSet(W, [p for p, on in zip(cells, flags) if on])


rationals = st.builds(
    Fraction,
    st.integers(min_value=-6, max_value=6),
    st.integers(min_value=1, max_value=4),
)


@st.composite
def vertex_functions(draw, dim: Optional[int] = None, max_cells: int = 16) -> VertexFunction:
    W = draw(windows(dim=dim, max_cells=max_cells))
    cells = W.closure_cells()
    values = draw(st.lists(rationals, min_size=len(cells), max_size=len(cells)))
    return VertexFunction(W, dict(zip(cells, values)))
