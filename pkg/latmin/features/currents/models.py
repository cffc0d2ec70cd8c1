from fractions import Fraction
from typing import Dict, Iterable, Optional, Tuple

from pydantic import BaseModel, ConfigDict

from latmin.features.lattice.models import Edge, Point, VertexSet, Window, window_edges
from latmin.features.lattice.services import neighbors


class Current:
    """Edge labels on E_Ω, stored for both orientations of every edge."""

    __slots__ = ("window", "values")

    def __init__(self, window: Window, values: Dict[Tuple[Point, Point], Fraction]):
        self.window = window
        self.values = values

    @classmethod
    def from_canonical(cls, window: Window, labels: Dict[Edge, int | Fraction]) -> "Current":
        values: Dict[Tuple[Point, Point], Fraction] = {}
        for (x, y), v in labels.items():
            values[(x, y)] = Fraction(v)
            values[(y, x)] = -Fraction(v)
        return cls(window, values)

    @classmethod
    def zero(cls, window: Window) -> "Current":
        return cls.from_canonical(window, {e: 0 for e in window_edges(window)})

    def __call__(self, x: Point, y: Point) -> Fraction:
        return self.values[(x, y)]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Current):
            return NotImplemented
        return self.window == other.window and self.values == other.values

    def divergence(self, x: Point) -> Fraction:
        return sum((self.values.get((x, y), Fraction(0)) for y in neighbors(x)), Fraction(0))

    def negated(self) -> "Current":
        return Current(self.window, {k: -v for k, v in self.values.items()})

    def canonical(self) -> Iterable[Tuple[Edge, Fraction]]:
        for edge in window_edges(self.window):
            yield edge, self.values[edge]

    def is_integral(self) -> bool:
        return all(v.denominator == 1 and -1 <= v <= 1 for v in self.values.values())


class Certificate(BaseModel):
    """Minimal current witnessing that the pattern's trace is least-perimeter on a window."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    pattern_id: str
    window: Window
    current: Current
    digest: Optional[str] = None

    @property
    def radius(self) -> Optional[int]:
        sides = set(self.window.shape)
        if len(sides) != 1:
            return None
        return (sides.pop() - 1) // 2

    @property
    def center(self) -> Optional[Point]:
        if self.radius is None or any(s % 2 == 0 for s in self.window.shape):
            return None
        return tuple(a + self.radius for a in self.window.lo)

    def negated(self) -> "Certificate":
        name = self.pattern_id[2:] if self.pattern_id.startswith("C:") else f"C:{self.pattern_id}"
        return Certificate(pattern_id=name, window=self.window, current=self.current.negated())


class Refutation(BaseModel):
    """A cheaper competitor with the same trace: conclusive non-minimality."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    pattern_id: str
    radius: int
    center: Tuple[int, ...]
    witness: VertexSet
    witness_perimeter: int
    pattern_perimeter: int
