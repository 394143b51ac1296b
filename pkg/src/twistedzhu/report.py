"""Verification records and the versioned report document."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field

SCHEMA_VERSION = 1

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"


@dataclass
class Record:
    id: str
    description: str
    anchor: str
    status: str
    details: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.status not in (PASS, FAIL, SKIPPED):
            raise ValueError(f"bad status {self.status!r}")
        if self.status == SKIPPED and "reason" not in self.details:
            raise ValueError("skipped records must carry a reason")


@dataclass
class Report:
    tool_version: str
    config: dict
    records: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    def add(self, record: Record):
        self.records.append(record)

    def summary(self) -> dict:
        counts = {PASS: 0, FAIL: 0, SKIPPED: 0}
        for r in self.records:
            counts[r.status] += 1
        counts["total"] = len(self.records)
        return counts

    @property
    def failed(self) -> bool:
        return any(r.status == FAIL for r in self.records)

    def to_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "tool": "twistedzhu",
            "tool_version": self.tool_version,
            "config": self.config,
            "records": [asdict(r) for r in self.records],
            "notes": list(self.notes),
            "summary": self.summary(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    def to_text(self) -> str:
        lines = []
        for r in self.records:
            line = f"{r.status.upper():7s} {r.id}  {r.description}"
            if r.status != PASS:
                extra = "; ".join(f"{k}={v}" for k, v in sorted(r.details.items()))
                line += f"  [{extra}]"
            lines.append(line)
        if self.notes:
            lines.append("")
            lines.extend(f"note: {n}" for n in self.notes)
        s = self.summary()
        lines.append("")
        lines.append(
            f"{s['total']} checks: {s[PASS]} passed, {s[FAIL]} failed, {s[SKIPPED]} skipped"
        )
        return "\n".join(lines) + "\n"
