# ============================================
# EVENTSYNC
# Report Schemas
# ============================================

"""
Pydantic models for command reports.

Handles:
- Model-checking reports
- Demo run reports
- Stress run reports

Reports render as key: value lines (see utils.formatting); field order is
output order.
"""

from typing import List, Optional

from pydantic import BaseModel, Field

from eventsync.schemas.scenario import ScenarioResult
from eventsync.utils.constants import Verdict


# ============================================
# MODEL CHECKING
# ============================================

class ModelCheckReport(BaseModel):
    """
    Outcome of model checking one program.
    """

    program: str = Field(
        ...,
        description="Program in canonical text form"
    )

    compiled_state: str = Field(
        ...,
        description="Initial machine state"
    )

    max_states: int = Field(
        ...,
        description="Exploration bound"
    )

    states: int = Field(
        ...,
        description="Distinct canonical states explored"
    )

    edges: int = Field(
        ...,
        description="Rule-labeled edges explored"
    )

    terminal_states: int = Field(
        ...,
        description="States without successors"
    )

    terminal_denotations: List[str] = Field(
        default_factory=list,
        description="Distinct denotations of terminal states"
    )

    invariants: str = Field(
        ...,
        description=f"Invariant check over every state ({Verdict.PASS}/{Verdict.FAIL})"
    )

    invariant_violations: int = Field(
        default=0,
        description="Malformed states found"
    )

    preservation: str = Field(
        ...,
        description="Every edge keeps well-formed states well-formed"
    )

    channel_liveness: str = Field(
        ...,
        description="Complementary unmatched points can always free their channel"
    )

    denotation_growth: str = Field(
        ...,
        description="Only rule IV.i changes the denotation, by one action"
    )

    correspondence: str = Field(
        ...,
        description="Correspondence clause for the initial pair"
    )

    safety: str = Field(
        ...,
        description="Safety clause for the initial pair"
    )

    progress: str = Field(
        ...,
        description="Progress clause for the initial pair"
    )

    program_states: int = Field(
        ...,
        description="States of the program transition system"
    )

    relation_size: int = Field(
        ...,
        description="Pairs in the computed relation"
    )

    graph_file: Optional[str] = Field(
        default=None,
        description="File the exported reach graph was written to"
    )

    verdict: str = Field(
        ...,
        description="Overall verdict"
    )

    elapsed_ms: str = Field(
        ...,
        description="Wall-clock time"
    )

    timestamp: str = Field(
        ...,
        description="Report time (ISO 8601)"
    )

    class Config:
        json_schema_extra = {
            "example": {
                "program": "select(!x,!y) | select(y,z) | select(!z) | select(x)",
                "compiled_state": "p0↦!x | p1↦!y | ...",
                "max_states": 100000,
                "states": 2048,
                "edges": 6100,
                "terminal_states": 6,
                "terminal_denotations": ["{x,!x,z,!z}", "{y,!y}"],
                "invariants": "pass",
                "invariant_violations": 0,
                "preservation": "pass",
                "channel_liveness": "pass",
                "denotation_growth": "pass",
                "correspondence": "pass",
                "safety": "pass",
                "progress": "pass",
                "program_states": 5,
                "relation_size": 4000,
                "graph_file": None,
                "verdict": "pass",
                "elapsed_ms": "812.40",
                "timestamp": "2024-01-15T14:30:00+00:00"
            }
        }


# ============================================
# DEMO
# ============================================

class DemoReport(BaseModel):
    """
    Outcome of running the library scenarios.
    """

    seed: int = Field(
        ...,
        description="Seed that fixed the scenario order"
    )

    timeout_ms: int = Field(
        ...,
        description="Budget per scenario"
    )

    scenarios: List[ScenarioResult] = Field(
        default_factory=list,
        description="Scenario results in run order"
    )

    passed: int = Field(
        default=0,
        description="Scenarios that passed"
    )

    failed: int = Field(
        default=0,
        description="Scenarios that failed or timed out"
    )

    verdict: str = Field(
        ...,
        description="Overall verdict"
    )

    timestamp: str = Field(
        ...,
        description="Report time (ISO 8601)"
    )


# ============================================
# STRESS
# ============================================

class StressReport(BaseModel):
    """
    Outcome of one randomized stress run.
    """

    seed: int = Field(..., description="Generator seed")
    mode: str = Field(..., description="Workload shape (plain/choose)")
    guarded: bool = Field(default=False, description="Guarded channels with predicates")
    tasks: int = Field(..., description="Syncing tasks")
    channels: int = Field(..., description="Channels")
    timeout_ms: int = Field(..., description="Wall-clock budget")

    completed: int = Field(default=0, description="Tasks whose sync returned")
    failed_tasks: int = Field(default=0, description="Tasks that raised")
    commits: int = Field(default=0, description="Committed rendezvous")
    retries: int = Field(default=0, description="Canceled sync attempts")
    values_match: bool = Field(
        default=False,
        description="Multiset of received values equals multiset of sent values"
    )
    predicate_violations: int = Field(
        default=0,
        description="Guarded receives that returned a value failing their predicate"
    )

    elapsed_ms: str = Field(..., description="Wall-clock time")
    throughput: str = Field(..., description="Commits per second")
    verdict: str = Field(..., description="Overall verdict")
    timestamp: str = Field(..., description="Report time (ISO 8601)")
