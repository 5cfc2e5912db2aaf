from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any

from core.complexes import HomologyProfile
from core.operads import ComponentVerdict

from .exceptions import OracleMismatchError


class VerdictKind(str, Enum):
    QISO_UP_TO_TRUNCATION = "QISO_UP_TO_TRUNCATION"
    NOT_QISO = "NOT_QISO"
    UNSUPPORTED = "UNSUPPORTED"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Verdict:
    kind: VerdictKind
    witness: str | None = None
    reason: str | None = None

    @classmethod
    def quasi_iso(cls) -> Verdict:
        return cls(VerdictKind.QISO_UP_TO_TRUNCATION)

    @classmethod
    def not_quasi_iso(cls, witness: str) -> Verdict:
        return cls(VerdictKind.NOT_QISO, witness=witness)

    @classmethod
    def unsupported(cls, reason: str) -> Verdict:
        return cls(VerdictKind.UNSUPPORTED, reason=reason)


@dataclass(frozen=True)
class ComponentRecord:
    r: int
    code: str
    s_count: int
    aut_order: int
    dims: dict[int, int]
    homology: HomologyProfile

    @classmethod
    def from_verdict(cls, r: int, verdict: ComponentVerdict) -> ComponentRecord:
        return cls(
            r=r,
            code=str(verdict.code),
            s_count=verdict.s_count,
            aut_order=verdict.aut_order,
            dims=dict(verdict.dims),
            homology=verdict.homology,
        )

    @property
    def acyclic(self) -> bool:
        return self.homology.is_zero()


@dataclass(frozen=True)
class Report:
    """
    The outcome of one scenario run: its parameters, one record per tree
    component and the verdict. A NOT_QISO verdict must name a recorded
    component with |S| >= 1 and non-zero homology.
    """

    scenario: str
    params: dict[str, Any]
    components: tuple[ComponentRecord, ...]
    verdict: Verdict
    notes: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "components", tuple(self.components))
        if self.verdict.kind is VerdictKind.NOT_QISO:
            witness = self.witness()
            if witness is None or witness.s_count < 1 or witness.acyclic:
                raise OracleMismatchError(
                    f"{self.scenario}: {self.verdict.witness} is not a valid witness"
                )

    def witness(self) -> ComponentRecord | None:
        return next((c for c in self.components if c.code == self.verdict.witness), None)

    @property
    def confirmed(self) -> bool:
        return self.verdict.kind is VerdictKind.QISO_UP_TO_TRUNCATION


@dataclass(frozen=True)
class SurveyRow:
    p: int
    s: int
    powers: dict[int, HomologyProfile]
    least_failing_power: int | None


@dataclass(frozen=True)
class Survey:
    max_power: int
    rows: tuple[SurveyRow, ...]
