from fractions import Fraction

from pydantic import BaseModel, ConfigDict


class CoareaResult(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    lhs: Fraction
    rhs: Fraction
    equal: bool
