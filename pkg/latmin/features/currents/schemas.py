from typing import Dict, List, Tuple, Union

from pydantic import BaseModel, ConfigDict

from latmin.features.currents.models import Certificate, Refutation
from latmin.features.lattice.models import Edge

Verdict = Union[Certificate, Refutation]


class ForcedConstraints(BaseModel):
    model_config = ConfigDict(frozen=True)

    # a_xy on the canonical orientation x → y
    forced: Dict[Edge, int]
    free: List[Edge]


class RadiusReport(BaseModel):
    """Outcome of a radius sweep; certification is evidence, refutation is proof."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    pattern_id: str
    center: Tuple[int, ...]
    r_max: int
    results: List[Verdict]

    @property
    def refuted_at(self) -> int | None:
        for item in self.results:
            if isinstance(item, Refutation):
                return item.radius
        return None

    @property
    def certified(self) -> bool:
        return self.refuted_at is None

    def summary(self) -> str:
        if self.certified:
            return f"certified to radius {self.r_max} (evidence, not a proof of minimality)"
        return f"refuted at radius {self.refuted_at} (not minimal)"
