"""
Toolkit Settings

Reads enumeration guards and logging preferences from the environment.
A `.env` file in the working directory is loaded by the CLI (python-dotenv);
library callers may pass explicit limits instead.
"""
import logging
import os
from functools import lru_cache
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator

logger = logging.getLogger(__name__)

ENV_PREFIX = "POSET_TOOLKIT_"


class ToolkitSettings(BaseModel):
    """Size guards and runtime preferences."""

    regular_max_vertices: int = Field(10, ge=0, description="Refuse regular enumeration above this many vertices")
    monotone_max_candidates: int = Field(24, ge=0, description="Refuse monotone enumeration above this many candidate pairs")
    map_max_source: int = Field(6, ge=0, description="Refuse map enumeration from sources larger than this")
    lattice_check_max: int = Field(600, ge=0, description="Exhaustive meet/join verification up to this many elements")
    batch_size: int = Field(4096, ge=1, description="Candidates evaluated per numpy batch")
    log_level: str = Field("INFO", description="Root log level for the CLI")

    model_config = ConfigDict(frozen=True, extra="forbid")

    @field_validator("log_level", mode="before")
    @classmethod
    def normalize_log_level(cls, v):
        """Accept any case; reject names logging does not know."""
        v_str = str(v).strip().upper()
        if not isinstance(logging.getLevelName(v_str), int):
            raise ValueError(f"Invalid log level: {v}")
        return v_str

    @classmethod
    def from_env(cls) -> "ToolkitSettings":
        """
        Build settings from POSET_TOOLKIT_* environment variables.

        Returns:
            ToolkitSettings with defaults for unset variables
        """
        values = {}
        for name in cls.model_fields:
            raw = os.getenv(ENV_PREFIX + name.upper())
            if raw is not None and raw.strip():
                values[name] = raw.strip()
        settings = cls(**values)
        if values:
            logger.debug(f"Loaded settings overrides from environment: {sorted(values)}")
        return settings


@lru_cache(maxsize=1)
def get_settings() -> ToolkitSettings:
    """Process-wide settings, read once from the environment."""
    return ToolkitSettings.from_env()


def resolve_limit(explicit: Optional[int], configured: int) -> int:
    """Explicit argument wins over the configured guard."""
    return configured if explicit is None else explicit
