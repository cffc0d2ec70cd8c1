from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict

from latmin.features.currents.models import Certificate
from latmin.features.currents.schemas import RadiusReport
from latmin.features.lattice.models import Point, VertexSet
from latmin.features.catalog2d.models import Params


class FamilyVerification(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    family_id: str
    pattern_id: str
    params: Params
    in_constraint: bool
    reconstructed: bool
    report: RadiusReport
    certificate: Optional[Certificate] = None


class CandidateReport(BaseModel):
    """Window minimizers found by trace enumeration, one per D4 class."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    radius: int
    traces_checked: int
    partial: bool
    candidates: List[VertexSet]
    # star of the centre vertex, as in-neighbour offsets
    local_forms: List[Tuple[Point, ...]]
