"""Base class for report formatters."""

from abc import ABC, abstractmethod

from ..builder import StatusReport


class BaseReporter(ABC):
    """Abstract base class for report formatters."""

    @property
    @abstractmethod
    def format_name(self) -> str:
        """Name of the output format."""
        pass

    @abstractmethod
    def format_report(self, report: StatusReport) -> str:
        """Render a status report.

        Args:
            report: Report of a stage or PID build

        Returns:
            Formatted output as string
        """
        pass
