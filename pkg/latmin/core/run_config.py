from argparse import Namespace
from pathlib import Path
from typing import Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field, PositiveInt, ValidationError, field_validator

from latmin.core.errors import usage_error


class RunConfig(BaseModel):
    """Everything one CLI invocation depends on; equal configs give equal output."""

    model_config = ConfigDict(frozen=True)

    command: str
    pattern: Optional[Path] = None
    family: Optional[str] = None
    params: Dict[str, int] = {}
    force: bool = False
    grid: Optional[Path] = None
    func: Optional[Path] = None
    cert: Optional[Path] = None
    window: Optional[List[int]] = None
    center: Optional[List[int]] = None
    radius: Optional[PositiveInt] = None
    output: Optional[Path] = None
    svg: Optional[Path] = None
    budget: Optional[PositiveInt] = None
    seed: int = 0
    k: Optional[int] = Field(default=None, ge=0)
    options: Dict[str, object] = {}

    @field_validator("window")
    @classmethod
    def _even_window(cls, value: Optional[List[int]]) -> Optional[List[int]]:
        # a single number is a radius around the centre
        if value is not None and (not value or (len(value) > 1 and len(value) % 2)):
            raise ValueError("--window takes one radius, or lo coordinates followed by hi coordinates")
        if value is not None and len(value) == 1 and value[0] < 0:
            raise ValueError("--window radius must be non-negative")
        return value

    @classmethod
    def from_namespace(cls, ns: Namespace) -> "RunConfig":
        known = set(cls.model_fields) - {"options", "params"}
        values = {k: v for k, v in vars(ns).items() if k in known and v is not None}
        options = {
            k: v for k, v in vars(ns).items() if k not in known and k not in ("handler", "param")
        }
        params: Dict[str, int] = {}
        for item in getattr(ns, "param", None) or []:
            key, sep, raw = item.partition("=")
            if not sep:
                raise usage_error(f"--param expects name=value, got {item!r}")
            try:
                params[key.strip()] = int(raw)
            except ValueError:
                raise usage_error(f"--param {key} needs an integer value") from None
        try:
            return cls(params=params, options=options, **values)
        except ValidationError as exc:
            error = exc.errors()[0]
            where = ".".join(str(p) for p in error["loc"])
            raise usage_error(f"invalid option {where}: {error['msg']}") from None

    def option(self, name: str, default: object = None) -> object:
        return self.options.get(name, default)
