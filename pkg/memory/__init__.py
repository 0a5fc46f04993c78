"""Memory module for run-report storage."""
from .report_store import ReportStore, RunReport, input_digest

__all__ = [
    "ReportStore",
    "RunReport",
    "input_digest",
]
