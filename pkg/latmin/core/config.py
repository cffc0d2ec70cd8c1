import os
from dotenv import load_dotenv
from pydantic_settings import BaseSettings
from typing import ClassVar

# Load .env file
load_dotenv()


class Settings(BaseSettings):
    DEBUG: bool = os.getenv("LATMIN_DEBUG", "False").lower() in ("true", "1")
    LOG_LEVEL: str = os.getenv("LATMIN_LOG_LEVEL", "WARNING")

    # worker cap for radius / trace fan-out
    THREADS: int = int(os.getenv("LATMIN_THREADS", "1"))

    DEFAULT_RADIUS: int = int(os.getenv("LATMIN_DEFAULT_RADIUS", "12"))
    # a family is registered only once its default member certifies to this radius
    CATALOG_RADIUS: int = int(os.getenv("LATMIN_CATALOG_RADIUS", "12"))
    BRUTE_FORCE_LIMIT: int = int(os.getenv("LATMIN_BRUTE_FORCE_LIMIT", "25"))
    ENUMERATION_BUDGET: int = int(os.getenv("LATMIN_ENUMERATION_BUDGET", "200000"))
    ENUMERATION_MAX_RADIUS: int = int(os.getenv("LATMIN_ENUMERATION_MAX_RADIUS", "5"))

    # These are ClassVar so Pydantic does not treat them as fields
    CERT_HASH: ClassVar[str] = "sha256"
    SVG_CELL_SIZE: ClassVar[int] = int(os.getenv("LATMIN_SVG_CELL_SIZE", "24"))

    class Config:
        case_sensitive = True


settings = Settings()
