"""
Reproducible verification scenarios over the coproduct engine, and their
reports.
"""

from .exceptions import OracleMismatchError, ScenarioPreconditionError
from .oracles import symmetric_power_oracle
from .reports import ComponentRecord, Report, Survey, SurveyRow, Verdict, VerdictKind
from .services import (
    VerifierService,
    run_case_i,
    run_case_ii,
    run_counterexample,
    survey,
)

__all__ = [
    "ComponentRecord",
    "OracleMismatchError",
    "Report",
    "ScenarioPreconditionError",
    "Survey",
    "SurveyRow",
    "Verdict",
    "VerdictKind",
    "VerifierService",
    "run_case_i",
    "run_case_ii",
    "run_counterexample",
    "survey",
    "symmetric_power_oracle",
]
