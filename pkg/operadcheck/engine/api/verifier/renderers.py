"""
JSON and tab-separated renderings of reports. Both are deterministic:
identical runs give byte-identical text.
"""

import json
import os
import tempfile
from pathlib import Path
from typing import Any

from .reports import ComponentRecord, Report, Survey
from .serializers import ComponentRecordSerializer, ReportSerializer, SurveySerializer

TSV_COLUMNS = ("code", "s_count", "degree", "dim", "free_rank", "torsion", "r", "aut_order")


def to_json(data: Any) -> str:
    return json.dumps(data, sort_keys=True, indent=2) + "\n"


def component_rows(record: ComponentRecord) -> list[tuple]:
    degrees = sorted(set(record.dims) | set(record.homology.degrees()))
    return [
        (
            record.code,
            record.s_count,
            degree,
            record.dims.get(degree, 0),
            record.homology.rank(degree),
            ",".join(str(t) for t in record.homology.torsion_at(degree)),
            record.r,
            record.aut_order,
        )
        for degree in degrees
    ]


def _tsv(columns: tuple, rows: list[tuple]) -> str:
    lines = ["\t".join(columns)]
    lines.extend("\t".join(str(value) for value in row) for row in rows)
    return "\n".join(lines) + "\n"


def render_report(report: Report, fmt: str = "json") -> str:
    if fmt == "tsv":
        return _tsv(TSV_COLUMNS, [row for c in report.components for row in component_rows(c)])
    return to_json(ReportSerializer(report).data)


def render_component(record: ComponentRecord, fmt: str = "json") -> str:
    if fmt == "tsv":
        return _tsv(TSV_COLUMNS, component_rows(record))
    return to_json(ComponentRecordSerializer(record).data)


def render_survey(survey: Survey, fmt: str = "json") -> str:
    if fmt == "tsv":
        rows = []
        for row in survey.rows:
            for m, profile in row.powers.items():
                ranks = ",".join(f"{d}:{r}" for d, r, _ in profile)
                rows.append((row.p, row.s, m, str(profile.is_zero()).lower(), ranks))
        return _tsv(("p", "s", "m", "acyclic", "free_ranks"), rows)
    return to_json(SurveySerializer(survey).data)


def render_counts(params: dict, codes: dict[int, list[str]], renderings: dict[str, str], fmt: str) -> str:
    if fmt == "tsv":
        return _tsv(("s_count", "classes"), [(s, len(c)) for s, c in sorted(codes.items())])
    payload: dict[str, Any] = {
        "params": params,
        "counts": {str(s): len(c) for s, c in codes.items()},
        "codes": {str(s): c for s, c in codes.items()},
    }
    if renderings:
        payload["renderings"] = renderings
    return to_json(payload)


def write_atomic(path: Path, text: str) -> None:
    """Write through a temporary file in the target directory, then rename"""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, temporary = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as handle:
            handle.write(text)
        os.replace(temporary, path)
    except BaseException:
        Path(temporary).unlink(missing_ok=True)
        raise
