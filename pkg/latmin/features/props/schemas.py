from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel

from latmin.features.lattice.models import Point, Window

Verdict = Literal["holds", "violated", "not-applicable"]


def format_value(value: Any) -> str:
    if isinstance(value, tuple) and all(isinstance(c, int) for c in value):
        return "(" + ",".join(str(c) for c in value) + ")"
    if isinstance(value, (list, tuple)):
        return "[" + ";".join(format_value(v) for v in value) + "]"
    return str(value)


class PropertyReport(BaseModel):
    property_id: str
    pattern_id: str
    window: Window
    verdict: Verdict
    witness: Dict[str, Any] = {}
    # window stand-in for a global hypothesis, when one is used
    surrogate: Optional[str] = None
    refuted_at: Optional[int] = None

    @property
    def holds(self) -> bool:
        return self.verdict == "holds"

    @property
    def violated(self) -> bool:
        return self.verdict == "violated"

    def line(self) -> str:
        parts = ["PROP", self.property_id, self.verdict, f"pattern={self.pattern_id}"]
        parts += [f"{k}={format_value(v)}" for k, v in self.witness.items()]
        if self.refuted_at is not None:
            parts.append(f"refuted_at={self.refuted_at}")
        if self.surrogate:
            parts.append(f"surrogate={self.surrogate.replace(' ', '_')}")
        return " ".join(parts)


class GrowthPoint(BaseModel):
    radius: int
    boundary: int
    volume: int
    bound: int


class GrowthSeries(BaseModel):
    pattern_id: str
    center: Point
    dim: int
    points: List[GrowthPoint]

    @property
    def within_bound(self) -> bool:
        return all(p.boundary <= p.bound for p in self.points)

    @property
    def boundary_nonempty(self) -> bool:
        """δA meets every ball of radius at least 2."""
        return all(p.boundary > 0 for p in self.points if p.radius >= 2)

    def records(self) -> List[str]:
        return [
            f"pattern={self.pattern_id} r={p.radius} boundary={p.boundary} "
            f"volume={p.volume} bound={p.bound}"
            for p in self.points
        ]
