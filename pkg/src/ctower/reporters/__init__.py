"""Output formatters for construction reports."""

from .base import BaseReporter
from .json_reporter import JSONReporter

__all__ = ["BaseReporter", "JSONReporter"]
