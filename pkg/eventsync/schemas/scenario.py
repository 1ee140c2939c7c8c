# ============================================
# EVENTSYNC
# Scenario Schemas
# ============================================

"""
Result of one scripted library scenario.
"""

from pydantic import BaseModel, Field

from eventsync.utils.constants import VERDICTS


class ScenarioResult(BaseModel):
    """
    Outcome of a single demo scenario.
    """

    name: str = Field(
        ...,
        description="Scenario name"
    )

    status: str = Field(
        ...,
        description=f"Scenario status ({', '.join(VERDICTS)})"
    )

    elapsed_ms: str = Field(
        ...,
        description="Wall-clock time"
    )

    detail: str = Field(
        default="",
        description="What was observed, or why the scenario failed"
    )

    class Config:
        json_schema_extra = {
            "example": {
                "name": "wrapabort",
                "status": "pass",
                "elapsed_ms": "1.92",
                "detail": "losing abort ran once, committed abort never ran"
            }
        }
