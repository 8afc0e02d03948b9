"""Exception hierarchy shared by every proxlaw package.

Domain errors derive from ``ValueError`` as well, so callers that only know
about bad input keep working. Each error names the element that caused it.
"""
from typing import Optional


class ProxLawError(Exception):
    """Base class for all proxlaw errors."""

    def __init__(self, message: str, element: Optional[str] = None):
        super().__init__(message)
        self.element = element


class DomainError(ProxLawError, ValueError):
    """Input or state that violates a domain rule (CLI exit status 1)."""


# --- graph-core ---

class SchemaError(DomainError):
    pass


class DuplicateNode(DomainError):
    pass


class DuplicateEdge(DomainError):
    pass


class UnknownEndpoint(DomainError):
    pass


class BadWeight(DomainError):
    pass


class BadAttribute(DomainError):
    pass


class SelfLoop(DomainError):
    pass


class DuplicateLayer(DomainError):
    pass


class EmptyGraph(DomainError):
    pass


class UnknownLayer(DomainError):
    pass


class UnknownNode(DomainError):
    pass


# --- metrics / stats ---

class WeightsUnavailable(DomainError):
    pass


class MissingAttribute(DomainError):
    pass


class LengthMismatch(DomainError):
    pass


class DegenerateVector(DomainError):
    pass


class BadParameter(DomainError):
    pass


class TooLargeForExhaustive(DomainError):
    pass


# --- experiment / prereg / extract ---

class ConfigMismatch(DomainError):
    pass


class DuplicateExperiment(DomainError):
    pass


class MalformedDigest(DomainError):
    pass


class MalformedLog(DomainError):
    def __init__(self, message: str, line_number: int):
        super().__init__(f"line {line_number}: {message}", element=str(line_number))
        self.line_number = line_number


class BadLayerKind(DomainError):
    pass


class LedgerIOError(ProxLawError, OSError):
    """Filesystem failure while reading or appending the ledger (CLI exit status 2)."""
