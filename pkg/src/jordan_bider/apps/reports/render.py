"""
Reports as bytes. The structured form is JSON with sorted keys; the text
form walks the same data in field order. Neither depends on anything but
the report, so identical inputs give identical bytes.
"""
from __future__ import annotations

from typing import Any, Iterator

from pydantic import BaseModel

from ...helpers.data.models import ProjectBaseModel, StrEnum, data_to_json_text
from .claims import Claim, claim_text


class OutputFormat(StrEnum):
    TEXT: str
    STRUCTURED: str


class ReportFile(ProjectBaseModel):
    command: str
    arguments: dict[str, str]
    summary: dict[str, Any]
    claims: list[Claim] = []
    details: dict[str, Any] = {}


def build_report(
    command: str,
    arguments: dict[str, Any],
    summary: dict[str, Any],
    details: BaseModel | dict[str, Any] | None = None,
    claims: list[Claim] | None = None,
) -> ReportFile:
    if isinstance(details, BaseModel):
        details = details.model_dump(mode="json")
    return ReportFile(
        command=command,
        arguments={key: claim_text(value) for key, value in arguments.items() if value is not None},
        summary=summary,
        claims=claims or [],
        details=details or {},
    )


def _is_subspace(value: dict[str, Any]) -> bool:
    return {"ambient_dim", "basis", "pivots"} <= value.keys()


def _scalar_text(value: Any) -> str:
    if value is None:
        return "null"
    return claim_text(value)


def _text_lines(key: str | None, value: Any, indent: int) -> Iterator[str]:
    pad = "  " * indent
    label = f"{pad}{key}:" if key is not None else f"{pad}-"
    if isinstance(value, dict):
        yield label
        if _is_subspace(value):
            yield f"{pad}  dimension: {len(value['basis'])}"
            yield from _text_lines("basis", value["basis"], indent + 1)
            return
        for k, v in value.items():
            yield from _text_lines(k, v, indent + 1)
    elif isinstance(value, list):
        if all(not isinstance(v, (dict, list)) for v in value):
            yield f"{label} [{', '.join(_scalar_text(v) for v in value)}]"
        else:
            yield label
            for v in value:
                yield from _text_lines(None, v, indent + 1)
    else:
        yield f"{label} {_scalar_text(value)}"


def render_text(report: ReportFile) -> str:
    lines = [f"command: {report.command}"]
    for key, value in report.arguments.items():
        lines.append(f"  {key}: {value}")
    lines.append("summary:")
    for key, value in report.summary.items():
        lines.extend(_text_lines(key, value, 1))
    if report.claims:
        lines.append("claims:")
        for claim in report.claims:
            lines.append(
                f"  [{claim.verdict.upper()}] {claim.source}: {claim.statement}: "
                f"claimed {claim.claimed}, computed {claim.computed}"
            )
    if report.details:
        lines.append("details:")
        for key, value in report.details.items():
            lines.extend(_text_lines(key, value, 1))
    return "\n".join(lines) + "\n"


def serialize_report(report: ReportFile, format: OutputFormat = OutputFormat.TEXT) -> bytes:
    match format:
        case OutputFormat.STRUCTURED:
            text = data_to_json_text(report.model_dump(mode="json"))
        case _:
            text = render_text(report)
    return text.encode("utf-8")
