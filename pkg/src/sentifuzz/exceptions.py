"""
Custom exceptions for the sentifuzz package.
"""

from typing import Optional


class SentiFuzzError(Exception):
    """Base exception for all sentifuzz errors."""

    pass


class LexiconParseError(SentiFuzzError):
    """Raised when a lexicon file contains a malformed line."""

    def __init__(self, line_number: int, message: str, source: str = "<stream>"):
        self.line_number = line_number
        self.source = source
        super().__init__(f"{source}:{line_number}: {message}")


class PretaggedParseError(SentiFuzzError):
    """Raised when a pre-tagged item is not a valid 'surface/TAG' pair."""

    def __init__(self, item: str, message: str):
        self.item = item
        super().__init__(f"Invalid pre-tagged item '{item}': {message}")


class InputFormatError(SentiFuzzError):
    """Raised when a corpus file cannot be ingested."""

    def __init__(self, path: str, line_number: Optional[int], message: str):
        self.path = path
        self.line_number = line_number
        location = path if line_number is None else f"{path}:{line_number}"
        super().__init__(f"{location}: {message}")


class PartitionError(SentiFuzzError):
    """Raised when a fuzzy partition is invalid."""

    pass


class DomainError(SentiFuzzError, ValueError):
    """Raised when a statistic or polarity is requested outside its domain."""

    pass


class ConfigurationError(SentiFuzzError):
    """Raised when a run configuration fails validation."""

    pass


class ChartError(SentiFuzzError):
    """Raised when writing a chart file fails."""

    pass


class ReportError(SentiFuzzError):
    """Raised when the report file cannot be written."""

    pass
