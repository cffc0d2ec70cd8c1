import logging
import sys

from latmin.core.config import settings


def setup_logging(level: str | None = None) -> None:
    """Route library logs to stderr; stdout is reserved for command output."""
    root = logging.getLogger("latmin")
    if root.handlers:
        root.setLevel(level or settings.LOG_LEVEL)
        return
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(
        logging.Formatter("%(asctime)s %(levelname)s %(name)s: %(message)s")
    )
    root.addHandler(handler)
    root.setLevel("DEBUG" if settings.DEBUG else (level or settings.LOG_LEVEL))
