from functools import lru_cache
from itertools import product
from typing import TYPE_CHECKING, FrozenSet, Iterable, Iterator, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from latmin.core.errors import LatminError, usage_error

if TYPE_CHECKING:
    from latmin.features.lattice.schemas import PatternOracle

Point = Tuple[int, ...]
# canonical undirected edge (x, y) with y = x + e_axis
Edge = Tuple[Point, Point]


def shift(p: Point, axis: int, step: int) -> Point:
    return p[:axis] + (p[axis] + step,) + p[axis + 1:]


# -------- Window --------
class Window(BaseModel):
    """Inclusive axis-aligned box of Zⁿ."""

    model_config = ConfigDict(frozen=True)

    lo: Tuple[int, ...]
    hi: Tuple[int, ...]

    @model_validator(mode="after")
    def _check_corners(self) -> "Window":
        if not self.lo or len(self.lo) != len(self.hi):
            raise usage_error(f"window corners {self.lo} / {self.hi} differ in dimension")
        if any(a > b for a, b in zip(self.lo, self.hi)):
            raise usage_error(f"window lo {self.lo} exceeds hi {self.hi}")
        return self

    @classmethod
    def ball(cls, center: Iterable[int], r: int) -> "Window":
        center = tuple(center)
        if r < 0:
            raise usage_error(f"negative radius {r}")
        return cls(lo=tuple(c - r for c in center), hi=tuple(c + r for c in center))

    @property
    def dim(self) -> int:
        return len(self.lo)

    @property
    def shape(self) -> Tuple[int, ...]:
        return tuple(b - a + 1 for a, b in zip(self.lo, self.hi))

    @property
    def size(self) -> int:
        total = 1
        for side in self.shape:
            total *= side
        return total

    def __contains__(self, p: Point) -> bool:
        return all(a <= c <= b for a, c, b in zip(self.lo, p, self.hi))

    def cells(self) -> List[Point]:
        return _cells(self)

    def ring(self) -> List[Point]:
        """τU: points outside the box at ℓ¹-distance 1."""
        return _ring(self)

    def closure_cells(self) -> List[Point]:
        """U ∪ τU in lexicographic order."""
        return _closure_cells(self)

    def in_closure(self, p: Point) -> bool:
        outside = 0
        for a, c, b in zip(self.lo, p, self.hi):
            if c < a - 1 or c > b + 1:
                return False
            if c < a or c > b:
                outside += 1
        return outside <= 1

    def dilate(self, k: int = 1) -> "Window":
        return Window(lo=tuple(a - k for a in self.lo), hi=tuple(b + k for b in self.hi))

    def translate(self, offset: Point) -> "Window":
        return Window(
            lo=tuple(a + o for a, o in zip(self.lo, offset)),
            hi=tuple(b + o for b, o in zip(self.hi, offset)),
        )


@lru_cache(maxsize=256)
def _cells(window: Window) -> List[Point]:
    return list(product(*(range(a, b + 1) for a, b in zip(window.lo, window.hi))))


@lru_cache(maxsize=256)
def _ring(window: Window) -> List[Point]:
    out = []
    for p in _cells(window.dilate(1)):
        if window.in_closure(p) and p not in window:
            out.append(p)
    return out


@lru_cache(maxsize=256)
def _closure_cells(window: Window) -> List[Point]:
    return [p for p in _cells(window.dilate(1)) if window.in_closure(p)]


@lru_cache(maxsize=256)
def window_edges(window: Window) -> List[Edge]:
    """E_U in canonical order: lexicographic on (min endpoint, axis)."""
    n = window.dim
    keyed = []
    for x in _cells(window):
        for axis in range(n):
            up = shift(x, axis, 1)
            keyed.append(((x, axis), (x, up)))
            down = shift(x, axis, -1)
            if down not in window:
                keyed.append(((down, axis), (down, x)))
    keyed.sort(key=lambda item: item[0])
    return [edge for _, edge in keyed]


# -------- Vertex sets --------
class VertexSet:
    """Subset of Zⁿ resolved on the closure U ∪ τU of a window.

    Explicit sets know nothing beyond the closure; pattern-backed sets fall
    back to their oracle for every other point.
    """

    __slots__ = ("window", "members", "pattern")

    def __init__(
        self,
        window: Window,
        members: Iterable[Point],
        pattern: Optional["PatternOracle"] = None,
    ):
        self.window = window
        self.members: FrozenSet[Point] = frozenset(
            p for p in members if window.in_closure(p)
        )
        self.pattern = pattern

    @classmethod
    def from_pattern(cls, pattern: "PatternOracle", window: Window) -> "VertexSet":
        test = pattern.predicate()
        return cls(window, (p for p in window.closure_cells() if test(p)), pattern)

    @property
    def outside_rule(self) -> str:
        return "explicit" if self.pattern is None else "from-pattern"

    @property
    def dim(self) -> int:
        return self.window.dim

    def __contains__(self, p: Point) -> bool:
        if self.window.in_closure(p):
            return p in self.members
        if self.pattern is None:
            raise LatminError(
                exit_code=2,
                detail=f"needs pattern: {p} lies outside the closure of {self.window}",
            )
        return self.pattern.contains(p)

    def __iter__(self) -> Iterator[Point]:
        return iter(sorted(self.members))

    def __len__(self) -> int:
        return len(self.members)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VertexSet):
            return NotImplemented
        return (
            self.window == other.window
            and self.members == other.members
            and self.outside_rule == other.outside_rule
        )

    def __hash__(self) -> int:
        return hash((self.window, self.members, self.outside_rule))

    def __repr__(self) -> str:
        return f"VertexSet({self.window.lo}..{self.window.hi}, {len(self.members)} in, {self.outside_rule})"

    def complement(self) -> "VertexSet":
        pattern = self.pattern.complement() if self.pattern is not None else None
        rest = (p for p in self.window.closure_cells() if p not in self.members)
        return VertexSet(self.window, rest, pattern)

    def interior(self) -> FrozenSet[Point]:
        """Members lying in the window itself."""
        return frozenset(p for p in self.members if p in self.window)

    def trace(self) -> FrozenSet[Point]:
        """K ∩ τU."""
        return frozenset(p for p in self.members if p not in self.window)

    def restrict(self, window: Window) -> "VertexSet":
        if self.pattern is not None:
            return VertexSet.from_pattern(self.pattern, window)
        for p in window.closure_cells():
            if not self.window.in_closure(p):
                raise LatminError(
                    exit_code=2,
                    detail=f"needs pattern: {window} is not inside the closure of {self.window}",
                )
        return VertexSet(window, (p for p in window.closure_cells() if p in self.members))
