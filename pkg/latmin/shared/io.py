import logging
import sys
from pathlib import Path
from typing import Iterable, List, Optional

from latmin.core.errors import usage_error
from latmin.core.run_config import RunConfig
from latmin.features.catalog2d.services import family_center, generate
from latmin.features.lattice.models import Point, Window
from latmin.features.lattice.schemas import PatternOracle
from latmin.features.lattice.services import load_pattern

logger = logging.getLogger(__name__)


def read_text(path: Path) -> str:
    if str(path) == "-":
        return sys.stdin.read()
    try:
        return path.read_text(encoding="utf-8")
    except OSError as exc:
        raise usage_error(f"cannot read {path}: {exc.strerror}") from exc


def write_text(path: Path, text: str) -> None:
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
    except OSError as exc:
        raise usage_error(f"cannot write {path}: {exc.strerror}") from exc
    logger.info("wrote %s", path)


class Sink:
    """Single ordered destination for command output."""

    def __init__(self, path: Optional[Path] = None):
        self.path = path
        self.lines: List[str] = []

    def emit(self, *lines: str) -> None:
        for line in lines:
            self.lines.extend(line.rstrip("\n").split("\n"))

    def extend(self, lines: Iterable[str]) -> None:
        self.emit(*lines)

    def flush(self) -> None:
        text = "\n".join(self.lines) + "\n" if self.lines else ""
        if self.path is None:
            sys.stdout.write(text)
            sys.stdout.flush()
        else:
            write_text(self.path, text)
        self.lines = []


def resolve_pattern(config: RunConfig) -> PatternOracle:
    if config.pattern is not None and config.family is not None:
        raise usage_error("give either --pattern or --family, not both")
    if config.pattern is not None:
        return load_pattern(read_text(config.pattern))
    if config.family is not None:
        return generate(config.family, config.params, force=config.force)
    raise usage_error("a pattern is required: --pattern FILE or --family ID")


def resolve_center(config: RunConfig, dim: int, default: Optional[Point] = None) -> Point:
    if config.center is not None:
        if len(config.center) != dim:
            raise usage_error(f"--center needs {dim} coordinates")
        return tuple(config.center)
    if default is None and config.family is not None:
        default = family_center(config.family, config.params)
    return tuple(default) if default is not None else (0,) * dim


def resolve_window(config: RunConfig, dim: int, default_radius: int, center: Point) -> Window:
    """--window lo.. hi.. (or --window R) wins over --radius around the centre."""
    if config.window is not None:
        if len(config.window) == 1:
            return Window.ball(center, config.window[0])
        half = len(config.window) // 2
        if half != dim:
            raise usage_error(f"--window needs {2 * dim} numbers for a {dim}-dimensional pattern")
        return Window(lo=tuple(config.window[:half]), hi=tuple(config.window[half:]))
    return Window.ball(center, config.radius or default_radius)
