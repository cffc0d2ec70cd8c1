from functools import lru_cache
from itertools import combinations, product
from typing import Annotated, Callable, List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, Field, PrivateAttr

from latmin.features.lattice.models import Point

Predicate = Callable[[Point], bool]


# -------- CSG nodes --------
class HalfSpace(BaseModel):
    """{sign·x[axis] ≥ c}; axes are 0-based."""

    op: Literal["halfspace"] = "halfspace"
    axis: int
    sign: Literal["+", "-"] = "+"
    c: int = 0

    def contains(self, p: Point) -> bool:
        v = p[self.axis] if self.sign == "+" else -p[self.axis]
        return v >= self.c

    def compile(self) -> Predicate:
        axis, c = self.axis, self.c
        if self.sign == "+":
            return lambda p: p[axis] >= c
        return lambda p: -p[axis] >= c


class Linear(BaseModel):
    """{Σ coeffs[i]·x[i] ≥ c}, e.g. the diagonal staircase half-plane."""

    op: Literal["linear"] = "linear"
    coeffs: List[int]
    c: int = 0

    def contains(self, p: Point) -> bool:
        return sum(a * x for a, x in zip(self.coeffs, p)) >= self.c

    def compile(self) -> Predicate:
        coeffs, c = tuple(self.coeffs), self.c
        return lambda p: sum(a * x for a, x in zip(coeffs, p)) >= c


class Orthant(BaseModel):
    """Quadrant/orthant with apex ``corner``: x[i] ≥ corner[i] where signs[i] is +."""

    op: Literal["orthant"] = "orthant"
    corner: List[int]
    signs: List[Literal["+", "-"]]

    def contains(self, p: Point) -> bool:
        for x, a, s in zip(p, self.corner, self.signs):
            if (s == "+" and x < a) or (s == "-" and x > a):
                return False
        return True

    def compile(self) -> Predicate:
        bounds = tuple(zip(self.corner, self.signs))

        def test(p: Point) -> bool:
            for x, (a, s) in zip(p, bounds):
                if s == "+":
                    if x < a:
                        return False
                elif x > a:
                    return False
            return True

        return test


class Box(BaseModel):
    op: Literal["box"] = "box"
    lo: List[int]
    hi: List[int]

    def contains(self, p: Point) -> bool:
        return all(a <= x <= b for a, x, b in zip(self.lo, p, self.hi))

    def compile(self) -> Predicate:
        bounds = tuple(zip(self.lo, self.hi))
        return lambda p: all(a <= x <= b for x, (a, b) in zip(p, bounds))


class Cells(BaseModel):
    op: Literal["cells"] = "cells"
    points: List[List[int]] = []

    def contains(self, p: Point) -> bool:
        return list(p) in self.points

    def compile(self) -> Predicate:
        members = frozenset(tuple(q) for q in self.points)
        return lambda p: tuple(p) in members


class Full(BaseModel):
    op: Literal["full"] = "full"

    def contains(self, p: Point) -> bool:
        return True

    def compile(self) -> Predicate:
        return lambda p: True


class AnyOf(BaseModel):
    op: Literal["union"] = "union"
    parts: List["Node"]

    def contains(self, p: Point) -> bool:
        return any(part.contains(p) for part in self.parts)

    def compile(self) -> Predicate:
        tests = tuple(part.compile() for part in self.parts)
        return lambda p: any(t(p) for t in tests)


class AllOf(BaseModel):
    op: Literal["intersection"] = "intersection"
    parts: List["Node"]

    def contains(self, p: Point) -> bool:
        return all(part.contains(p) for part in self.parts)

    def compile(self) -> Predicate:
        tests = tuple(part.compile() for part in self.parts)
        return lambda p: all(t(p) for t in tests)


class Not(BaseModel):
    op: Literal["complement"] = "complement"
    part: "Node"

    def contains(self, p: Point) -> bool:
        return not self.part.contains(p)

    def compile(self) -> Predicate:
        test = self.part.compile()
        return lambda p: not test(p)


class Translate(BaseModel):
    op: Literal["translate"] = "translate"
    offset: List[int]
    part: "Node"

    def contains(self, p: Point) -> bool:
        return self.part.contains(tuple(x - o for x, o in zip(p, self.offset)))

    def compile(self) -> Predicate:
        offset = tuple(self.offset)
        test = self.part.compile()
        return lambda p: test(tuple(x - o for x, o in zip(p, offset)))


class Extrude(BaseModel):
    """Cylinder over a lower-dimensional pattern: keeps the listed axes."""

    op: Literal["extrude"] = "extrude"
    axes: List[int]
    part: "Node"

    def contains(self, p: Point) -> bool:
        return self.part.contains(tuple(p[a] for a in self.axes))

    def compile(self) -> Predicate:
        axes = tuple(self.axes)
        test = self.part.compile()
        return lambda p: test(tuple(p[a] for a in axes))


@lru_cache(maxsize=64)
def cube_offsets(n: int, k: int) -> Tuple[Tuple[Point, ...], ...]:
    """Corner offsets of every unit k-cube of Zⁿ that has the origin as a vertex."""
    cubes = []
    for axes in combinations(range(n), k):
        for signs in product((-1, 1), repeat=k):
            corners = []
            for picks in product((0, 1), repeat=k):
                offset = [0] * n
                for axis, sign, pick in zip(axes, signs, picks):
                    offset[axis] = sign * pick
                corners.append(tuple(offset))
            cubes.append(tuple(corners))
    return tuple(cubes)


class Skeleton(BaseModel):
    """Vertices of the part lying on a unit k-cube whose corners all belong to the part."""

    op: Literal["skeleton"] = "skeleton"
    k: int = Field(ge=0)
    part: "Node"

    def contains(self, p: Point) -> bool:
        return self._scan(p, self.part.contains)

    def compile(self) -> Predicate:
        test = self.part.compile()
        return lambda p: self._scan(p, test)

    def _scan(self, p: Point, test: Predicate) -> bool:
        if self.k > len(p):
            return False
        for corners in cube_offsets(len(p), self.k):
            if all(test(tuple(a + b for a, b in zip(p, c))) for c in corners):
                return True
        return False


Node = Annotated[
    Union[HalfSpace, Linear, Orthant, Box, Cells, Full, AnyOf, AllOf, Not, Translate, Extrude, Skeleton],
    Field(discriminator="op"),
]

for _model in (AnyOf, AllOf, Not, Translate, Extrude, Skeleton):
    _model.model_rebuild()


# -------- Pattern document --------
class PatternOracle(BaseModel):
    """Infinite candidate subgraph of Zⁿ given by a CSG tree."""

    dim: int = Field(ge=1)
    expr: Node
    id: Optional[str] = None

    _predicate: Optional[Predicate] = PrivateAttr(default=None)

    def contains(self, p: Point) -> bool:
        return self.expr.contains(p)

    def predicate(self) -> Predicate:
        """Compiled evaluator; agrees with ``contains`` on every point."""
        if self._predicate is None:
            self._predicate = self.expr.compile()
        return self._predicate

    def __call__(self, p: Point) -> bool:
        return self.predicate()(p)

    def complement(self) -> "PatternOracle":
        if isinstance(self.expr, Not):
            inner, name = self.expr.part, self.id
            if name and name.startswith("C:"):
                name = name[2:]
            elif name:
                name = f"C:{name}"
            return PatternOracle(dim=self.dim, expr=inner, id=name)
        name = f"C:{self.id}" if self.id else None
        return PatternOracle(dim=self.dim, expr=Not(part=self.expr), id=name)

    def translated(self, offset: Tuple[int, ...]) -> "PatternOracle":
        return PatternOracle(
            dim=self.dim, expr=Translate(offset=list(offset), part=self.expr), id=self.id
        )

    def extruded(self, dim: int) -> "PatternOracle":
        """Product with Z^(dim - self.dim) along the trailing axes."""
        name = f"{self.id}xZ" if self.id else None
        return PatternOracle(
            dim=dim, expr=Extrude(axes=list(range(self.dim)), part=self.expr), id=name
        )
