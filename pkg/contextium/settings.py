"""Runtime configuration, read from ``CONTEXTIUM_*`` environment variables."""

from functools import lru_cache

import psutil
from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    model_config = SettingsConfigDict(env_prefix="CONTEXTIUM_", frozen=True)

    seed: int = 42
    threads: int = Field(default=0, ge=0)
    # Relative to max(1, ‖M‖_max)
    hermiticity_tol: float = 1e-9
    # Relative to max(1, ‖H‖_op)
    group_tol: float = 1e-9
    # Relative to ‖A‖_op·‖B‖_op
    commute_tol: float = 1e-8
    projector_tol: float = 1e-9
    # Slack allowed before a clamped quantity (E, 1-E, a variance) is reported as a failure
    clamp_tol: float = 1e-9
    log_level: str = "WARNING"


@lru_cache
def get_settings() -> Settings:
    """Get the process-wide settings instance."""
    return Settings()


def resolve_threads(threads: int | None = None) -> int:
    """Map a ``--threads`` value to a worker count; 0 means one per physical core."""
    if threads is None:
        threads = get_settings().threads
    if threads > 0:
        return threads
    return psutil.cpu_count(logical=False) or psutil.cpu_count() or 1
