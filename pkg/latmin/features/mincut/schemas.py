from typing import List

from pydantic import BaseModel, ConfigDict

from latmin.features.lattice.models import VertexSet


class CutResult(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    K_opt: VertexSet
    value: int


class BruteForceResult(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    value: int
    all_optima: List[VertexSet]
