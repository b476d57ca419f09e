"""
Report builder for assembling command and suite output.
"""

from dataclasses import dataclass, field
from typing import Any, Optional

from varietas.codec import JsonCodec


@dataclass
class ReportSection:
    """One titled block of a report; `ok` is None for purely informational sections."""

    title: str
    fields: dict[str, Any] = field(default_factory=dict)
    ok: Optional[bool] = None
    details: list[str] = field(default_factory=list)

    def as_dict(self) -> dict[str, Any]:
        data: dict[str, Any] = {"title": self.title, **self.fields}
        if self.ok is not None:
            data["ok"] = self.ok
        if self.details:
            data["details"] = self.details
        return data


class ReportBuilder:
    """Builds reports from titled sections, rendered as text or JSON."""

    def __init__(self, title: str):
        self.title = title
        self.sections: list[ReportSection] = []
        self.payload: Optional[Any] = None
        self.dot: Optional[str] = None

    def add_section(
        self, title: str, ok: Optional[bool] = None, details: Optional[list[str]] = None, **fields
    ) -> "ReportBuilder":
        """Append a section; returns self for chaining."""
        self.sections.append(ReportSection(title, fields, ok, details or []))
        return self

    def build(self) -> list[ReportSection]:
        return list(self.sections)

    @property
    def ok(self) -> bool:
        return all(section.ok is not False for section in self.sections)

    @property
    def failed(self) -> list[str]:
        return [section.title for section in self.sections if section.ok is False]

    def render_text(self) -> str:
        lines = [f"== {self.title} =="]
        for section in self.sections:
            mark = "" if section.ok is None else (" [PASS]" if section.ok else " [FAIL]")
            lines.append(f"{section.title}{mark}")
            for key, value in section.fields.items():
                lines.append(f"  {key}: {value}")
            for detail in section.details:
                lines.append(f"  - {detail}")
        lines.append(f"verdict: {'OK' if self.ok else 'FAILED'}")
        return "\n".join(lines)

    def render_json(self) -> str:
        document: dict[str, Any] = {
            "title": self.title,
            "ok": self.ok,
            "sections": [section.as_dict() for section in self.sections],
        }
        if self.payload is not None:
            document["result"] = self.payload
        return JsonCodec.dumps(document)
