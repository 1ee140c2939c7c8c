# ============================================
# EVENTSYNC
# Command-Line Configuration Schema
# ============================================

"""
Validated configuration of one command-line invocation.

Defaults come from settings; flags override them per invocation.
"""

from typing import Optional

from pydantic import BaseModel, Field, field_validator, model_validator

from eventsync.config import settings
from eventsync.utils.constants import STRESS_MODES, SUBCOMMANDS, StressMode, Subcommand


class CliConfig(BaseModel):
    """
    Configuration for one subcommand run.
    """

    subcommand: str = Field(
        ...,
        description=f"One of: {', '.join(SUBCOMMANDS)}"
    )

    # --- modelcheck ---
    source: Optional[str] = Field(
        default=None,
        description="Program file, or '-' for stdin"
    )
    expr: Optional[str] = Field(
        default=None,
        description="Inline program text"
    )
    graph_path: Optional[str] = Field(
        default=None,
        description="Where to write the exported reach graph"
    )
    max_states: int = Field(
        default=settings.max_states,
        gt=0,
        description="Exploration bound"
    )

    # --- demo / stress ---
    timeout_ms: Optional[int] = Field(
        default=None,
        ge=0,
        description="Wall-clock budget in milliseconds; per scenario for demo, per run for stress"
    )
    seed: int = Field(
        default=settings.seed,
        description="Seed for randomized scenarios"
    )
    tasks: int = Field(
        default=settings.stress_tasks,
        ge=2,
        description="Syncing tasks (stress); paired up, so must be even"
    )
    channels: int = Field(
        default=settings.stress_channels,
        gt=0,
        description="Channels (stress)"
    )
    guarded: bool = Field(
        default=False,
        description="Use guarded channels (stress)"
    )
    mode: str = Field(
        default=StressMode.PLAIN,
        description=f"Stress workload: {', '.join(STRESS_MODES)}"
    )

    verbosity: int = Field(
        default=0,
        description="-1 quiet, 0 normal, 1 verbose"
    )

    @field_validator("subcommand")
    @classmethod
    def check_subcommand(cls, value: str) -> str:
        if value not in SUBCOMMANDS:
            raise ValueError(f"unknown subcommand {value!r}")
        return value

    @field_validator("mode")
    @classmethod
    def check_mode(cls, value: str) -> str:
        if value not in STRESS_MODES:
            raise ValueError(f"mode must be one of {', '.join(STRESS_MODES)}")
        return value

    @field_validator("tasks")
    @classmethod
    def check_tasks_even(cls, value: int) -> int:
        if value % 2:
            raise ValueError("tasks must be even so every task has a partner")
        return value

    @model_validator(mode="after")
    def check_program_source(self) -> "CliConfig":
        if self.subcommand == Subcommand.MODELCHECK and self.source and self.expr:
            raise ValueError("give either a program file or --expr, not both")
        return self
