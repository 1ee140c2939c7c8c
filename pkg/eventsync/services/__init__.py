# ============================================
# EVENTSYNC
# Services Package Initialization
# ============================================

"""
Business logic behind the commands.

This package contains:
- modelcheck_service: Parse, explore, audit and check a program
- demo_service: Scripted scenarios against the live library
- stress_service: Randomized live workloads
"""

from eventsync.services.modelcheck_service import ModelCheckService
from eventsync.services.stress_service import StressService
from eventsync.services.demo_service import DemoService

__all__ = [
    "ModelCheckService",
    "DemoService",
    "StressService",
]
