# ============================================
# EVENTSYNC
# Model Check Service
# ============================================

"""
Model-checking business logic.

Handles:
- Parsing and compiling a program
- Exploring the machine's reach graph
- Auditing the graph and checking the program/machine correspondence
- Exporting the graph
"""

import logging
import time
from pathlib import Path
from typing import Optional

from eventsync.config import settings
from eventsync.errors import StateBoundExceeded
from eventsync.machine import check_graph, compile_program, explore, export_graph, verify_theorem
from eventsync.progdsl import parse_program
from eventsync.schemas.report import ModelCheckReport
from eventsync.utils.constants import Verdict
from eventsync.utils.timezone import format_duration_ms, format_iso, get_current_time

logger = logging.getLogger(__name__)


def _verdict(ok: bool) -> str:
    return Verdict.PASS if ok else Verdict.FAIL


class ModelCheckService:
    """
    Service class for model checking.

    All methods are static for easy use without instantiation.
    """

    @staticmethod
    def write_graph(text: str, path: str) -> str:
        """Write an exported graph; returns the path written."""
        Path(path).write_text(text, encoding="utf-8")
        logger.info(f"Wrote reach graph to {path}")
        return path

    @staticmethod
    def run(
        text: str,
        max_states: Optional[int] = None,
        graph_path: Optional[str] = None,
    ) -> ModelCheckReport:
        """
        Model check a program.

        Args:
            text: Program text
            max_states: Exploration bound; defaults to settings.max_states
            graph_path: Optional file for the exported reach graph (the partial
                graph is written too when the bound is exceeded)

        Returns:
            ModelCheckReport: verdict is pass iff the audit and all three
            correctness clauses pass

        Raises:
            ProgramSyntaxError: If the program does not parse
            StateBoundExceeded: If exploration hits the bound
        """
        bound = settings.max_states if max_states is None else max_states
        started = time.perf_counter()

        program = parse_program(text)
        initial = compile_program(program)
        logger.info(f"Model checking {program} (bound {bound})")

        try:
            reach = explore(initial, bound)
        except StateBoundExceeded as exc:
            if graph_path:
                ModelCheckService.write_graph(export_graph(exc.partial), graph_path)
            raise

        audit = check_graph(reach)
        theorem = verify_theorem(program, bound, reach=reach)

        if graph_path:
            ModelCheckService.write_graph(export_graph(reach), graph_path)

        invariants_ok = not audit.invariant_violations
        report = ModelCheckReport(
            program=str(program.normalized()),
            compiled_state=str(initial),
            max_states=bound,
            states=len(reach),
            edges=reach.graph.number_of_edges(),
            terminal_states=len(reach.terminals),
            terminal_denotations=theorem.terminal_denotations,
            invariants=_verdict(invariants_ok),
            invariant_violations=len(audit.invariant_violations),
            preservation=_verdict(not audit.preservation_failures),
            channel_liveness=_verdict(not audit.liveness_failures),
            denotation_growth=_verdict(not audit.growth_failures),
            correspondence=_verdict(theorem.correspondence),
            safety=_verdict(theorem.safety),
            progress=_verdict(theorem.progress),
            program_states=theorem.program_states,
            relation_size=theorem.relation_size,
            graph_file=graph_path,
            verdict=_verdict(audit.ok and theorem.holds),
            elapsed_ms=format_duration_ms(time.perf_counter() - started),
            timestamp=format_iso(get_current_time()),
        )

        if report.verdict != Verdict.PASS:
            logger.warning(
                f"Model check failed for {report.program}: "
                f"clause={theorem.failed_clause}, audit_ok={audit.ok}"
            )
        return report
