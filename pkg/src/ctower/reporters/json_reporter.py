"""JSON output for construction reports."""

import json
from typing import Any, Dict

from .. import __version__
from ..builder import IndexStatus, StatusReport
from .base import BaseReporter


class JSONReporter(BaseReporter):
    """Deterministic JSON: two identical builds render byte-identical reports."""

    @property
    def format_name(self) -> str:
        return "json"

    def to_data(self, report: StatusReport) -> Dict[str, Any]:
        return {
            "tool": {"name": "ctower", "version": __version__},
            "mode": report.mode,
            "stages": report.stages,
            "levels": report.levels,
            "acts": report.acts,
            "per_i": [self._format_index(entry, report.mode) for entry in report.per_i],
            "fates": dict(sorted(report.fates.items())),
            "violations": [v.to_dict() for v in report.violations],
        }

    def format_report(self, report: StatusReport) -> str:
        return json.dumps(self.to_data(report), indent=2, ensure_ascii=False)

    def _format_index(self, entry: IndexStatus, mode: str) -> Dict[str, Any]:
        if mode == "pid":
            return {
                "i": entry.i,
                "state": entry.state,
                "is_unit": entry.is_unit,
                "enumerated_at": entry.enumerated_at,
            }
        data: Dict[str, Any] = {"i": entry.i, "state": entry.state}
        # only factored indices carry a generator index
        if entry.k is not None:
            data["k"] = entry.k
        data["acts"] = entry.acts
        data["retired_units"] = entry.retired_units
        data["predicted_limit"] = entry.predicted_limit
        return data
