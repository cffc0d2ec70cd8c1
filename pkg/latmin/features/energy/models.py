from fractions import Fraction
from typing import Dict, Mapping, Union

from latmin.core.errors import LatminError
from latmin.features.lattice.models import Point, VertexSet, Window

Number = Union[int, Fraction]


class VertexFunction:
    """Rational-valued function, total on the closure U ∪ τU of its window."""

    __slots__ = ("window", "values")

    def __init__(self, window: Window, values: Mapping[Point, Number]):
        self.window = window
        self.values: Dict[Point, Fraction] = {}
        for p in window.closure_cells():
            if p not in values:
                raise LatminError(exit_code=2, detail=f"function is partial: no value at {p}")
            self.values[p] = Fraction(values[p])

    @classmethod
    def indicator(cls, K: VertexSet, window: Window | None = None) -> "VertexFunction":
        window = window or K.window
        return cls(window, {p: int(p in K) for p in window.closure_cells()})

    def __call__(self, p: Point) -> Fraction:
        return self.values[p]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VertexFunction):
            return NotImplemented
        return self.window == other.window and self.values == other.values

    def shifted(self, c: Number) -> "VertexFunction":
        return VertexFunction(self.window, {p: v + c for p, v in self.values.items()})

    def negated(self) -> "VertexFunction":
        return VertexFunction(self.window, {p: -v for p, v in self.values.items()})
