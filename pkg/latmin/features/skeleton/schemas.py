from fractions import Fraction
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict

from latmin.features.currents.schemas import RadiusReport
from latmin.features.lattice.models import Point, VertexSet


class SkeletonReductionReport(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    pattern_id: str
    r_max: int
    base: RadiusReport
    reduced: RadiusReport
    # a current of M that is also a valid certificate for M³ ∪ M²
    restriction_valid: bool
    # vertices where 0 ∉ Δ₁(1_{M³})
    m3_obstructions: List[Point] = []

    @property
    def passed(self) -> bool:
        return self.reduced.certified and self.restriction_valid


class RoughIsometryStats(BaseModel):
    pattern_id: str
    center: Point
    radius: int
    dim: int
    vol_ratio: Optional[Fraction]
    bdy_ratio: Optional[Fraction]
    max_skeleton_dist: Optional[int]
    c1_bound: int
    # |(M − Mⁿ) ∩ B̂_r| against 2n·|Mⁿ ∩ N₁(M − Mⁿ) ∩ B̂_r|
    fringe_size: int
    fringe_bound: int
    skeleton_empty: bool
    surrogate: str = "distances measured inside the doubled window"

    @property
    def bdy_bound(self) -> Fraction:
        return Fraction(1, 1 + 2 * self.dim)

    @property
    def fringe_bound_holds(self) -> bool:
        return self.fringe_size <= self.fringe_bound

    def records(self) -> List[str]:
        """key=value lines for plotting."""
        fields = {
            "pattern": self.pattern_id,
            "r": self.radius,
            "vol_ratio": self.vol_ratio,
            "bdy_ratio": self.bdy_ratio,
            "bdy_bound": self.bdy_bound,
            "max_skeleton_dist": self.max_skeleton_dist,
            "c1": self.c1_bound,
            "fringe": f"{self.fringe_size}<={self.fringe_bound}",
            "skeleton_empty": self.skeleton_empty,
        }
        return [" ".join(f"{k}={'-' if v is None else v}" for k, v in fields.items())]


class DecayPoint(BaseModel):
    radius: int
    ratio: Optional[Fraction]
    components: int
    # components not touching the window rim
    finite_components: int


class DecaySeries(BaseModel):
    pattern_id: str
    center: Point
    points: List[DecayPoint]

    @property
    def non_increasing(self) -> bool:
        ratios = [p.ratio for p in self.points if p.ratio is not None]
        return all(b <= a for a, b in zip(ratios, ratios[1:]))

    @property
    def flagged(self) -> bool:
        return any(p.finite_components for p in self.points)

    def records(self) -> List[str]:
        return [
            f"pattern={self.pattern_id} r={p.radius} ratio={'-' if p.ratio is None else p.ratio} "
            f"components={p.components} finite={p.finite_components}"
            for p in self.points
        ]


class ObstructionWitness(BaseModel):
    """Window minimizer whose 3-skeleton fails the local test at the centre."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    members: VertexSet
    center: Point
    interval: Tuple[int, int]
    seed: int
    trials: int
