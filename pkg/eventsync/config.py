# ============================================
# EVENTSYNC
# Configuration Settings
# ============================================

"""
Library and harness configuration using Pydantic Settings.
Loads values from environment variables (prefix EVENTSYNC_) with validation.
"""

from functools import lru_cache

from pydantic import Field
from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    """
    Settings loaded from environment variables.

    Pydantic reads an optional .env file and validates types.
    """

    # --- Application Settings ---
    app_name: str = Field(
        default="EventSync",
        description="Application name"
    )
    app_version: str = Field(
        default="1.0.0",
        description="Application version"
    )
    debug: bool = Field(
        default=False,
        description="Debug mode: invariant checks on every machine step, "
                    "single-deposit assertions on result cells, DEBUG logging"
    )

    # --- Model Checker ---
    max_states: int = Field(
        default=100_000,
        gt=0,
        description="Exploration bound for the abstract machine"
    )

    # --- Live Harness ---
    timeout_ms: int = Field(
        default=5_000,
        ge=0,
        description="Wall-clock budget per demo scenario"
    )
    stress_timeout_ms: int = Field(
        default=30_000,
        ge=0,
        description="Wall-clock budget for one stress run"
    )
    stress_tasks: int = Field(
        default=200,
        gt=0,
        description="Number of syncing tasks in a stress run"
    )
    stress_channels: int = Field(
        default=50,
        gt=0,
        description="Number of channels in a stress run"
    )
    seed: int = Field(
        default=0,
        description="Seed for randomized scenarios"
    )
    deposit_grace_ms: int = Field(
        default=20,
        ge=0,
        description="Debug-only window in which a second result deposit is reported"
    )

    # --- Reports ---
    timezone: str = Field(
        default="UTC",
        description="Timezone for report timestamps"
    )

    class Config:
        """Pydantic configuration."""

        env_prefix = "EVENTSYNC_"
        env_file = ".env"
        env_file_encoding = "utf-8"
        case_sensitive = False
        extra = "ignore"


@lru_cache()
def get_settings() -> Settings:
    """
    Get cached settings instance.

    Returns:
        Settings: Application settings instance
    """
    return Settings()


# Global settings instance for easy access
settings = get_settings()
