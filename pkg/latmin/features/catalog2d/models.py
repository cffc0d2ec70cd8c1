from typing import Callable, Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict

from latmin.features.lattice.models import Point, Window
from latmin.features.lattice.schemas import Node

Params = Dict[str, int]


class Family(BaseModel):
    """A parametric Z² family; parameters are named as captioned (h, d, a, b)."""

    model_config = ConfigDict(frozen=True)

    id: str
    parameters: Tuple[str, ...] = ()
    defaults: Dict[str, int] = {}
    caption: str = ""
    constraint: Callable[[Params], bool] = lambda params: True
    build: Callable[[Params], Node]
    anchor: Callable[[Params], Point] = lambda params: (0, 0)
    connected: bool = True
    # geometry rebuilt from prose and enumeration rather than a figure
    reconstructed: bool = False
    complement_of: Optional[str] = None

    def resolve(self, params: Optional[Params] = None) -> Params:
        merged = dict(self.defaults)
        merged.update({k: v for k, v in (params or {}).items() if k in self.parameters})
        return merged


class IsolatedPath(BaseModel):
    vertices: List[Point]
    length: int
    geodesic: bool


class BoundaryAnalysis(BaseModel):
    """Boundary structure of a Z² pattern inside a window (flags are window surrogates)."""

    window: Window
    boundary_vertices: List[Point]
    degrees: Dict[Point, int]
    boundary_edges: List[Tuple[Point, Point]]
    corners: List[Point]
    flat_runs: List[Tuple[Point, Point]]
    loops: List[List[Point]]
    components: int
    isolated_paths: List[IsolatedPath]
    geodesic: bool
    simple: bool
    oriented: bool
    surrogate: str = "within window"

    @property
    def unit_square_loops(self) -> List[List[Point]]:
        return [loop for loop in self.loops if _is_unit_square(loop)]


def _is_unit_square(loop: List[Point]) -> bool:
    if len(loop) != 4:
        return False
    xs = {p[0] for p in loop}
    ys = {p[1] for p in loop}
    return len(xs) == 2 and len(ys) == 2 and max(xs) - min(xs) == 1 and max(ys) - min(ys) == 1
