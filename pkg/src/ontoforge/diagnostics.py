"""Diagnostics shared across the pipeline.

Every non-fatal anomaly and every rejection is reported as a ``Diagnostic``
with a stable machine code, so batch tooling can match on codes instead of
message text.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field


class Severity(enum.Enum):
    WARNING = "warning"
    ERROR = "error"


@dataclass(frozen=True)
class Location:
    """1-based line / column of the construct that triggered a diagnostic."""

    line: int = 0
    column: int = 0

    def __str__(self) -> str:
        return f"{self.line}:{self.column}"


# Parser codes.
MALFORMED_XML = "MALFORMED_XML"
UNEXPECTED_ROOT = "UNEXPECTED_ROOT"
DUPLICATE_CLASS = "DUPLICATE_CLASS"
DANGLING_REFERENCE = "DANGLING_REFERENCE"
MULTIPLE_UNION = "MULTIPLE_UNION"
UNSUPPORTED_CONSTRUCT = "UNSUPPORTED_CONSTRUCT"
MISSING_IDENTIFIER = "MISSING_IDENTIFIER"
UNTYPED_INDIVIDUAL = "UNTYPED_INDIVIDUAL"
DUPLICATE_INDIVIDUAL = "DUPLICATE_INDIVIDUAL"
DUPLICATE_UNION_MEMBER = "DUPLICATE_UNION_MEMBER"
UNION_ARITY = "UNION_ARITY"

# Pivot codes.
IDENTIFIER_COLLISION = "IDENTIFIER_COLLISION"
SELF_REFERENTIAL_UNION = "SELF_REFERENTIAL_UNION"
CYCLE_IN_SUBSUMPTION = "CYCLE_IN_SUBSUMPTION"
REDUNDANT_EQUIV_SUBCLASS = "REDUNDANT_EQUIV_SUBCLASS"
UNION_TARGET_DIRECT_INSTANCES = "UNION_TARGET_DIRECT_INSTANCES"

# Context validation codes.
UNDECLARED_IDENTIFIER = "UNDECLARED_IDENTIFIER"
DUPLICATE_LABEL = "DUPLICATE_LABEL"
BAD_LABEL = "BAD_LABEL"
SET_CONSTANT_OVERLAP = "SET_CONSTANT_OVERLAP"

# Codegen codes.
NARY_UNION_SPLIT = "NARY_UNION_SPLIT"

# Checker codes.
DOMAIN_TOO_LARGE = "DOMAIN_TOO_LARGE"


@dataclass(frozen=True)
class Diagnostic:
    severity: Severity
    code: str
    message: str
    location: Location = field(default_factory=Location)

    @property
    def is_error(self) -> bool:
        return self.severity is Severity.ERROR

    def __str__(self) -> str:
        return f"{self.location}: {self.severity.value}: {self.code}: {self.message}"


def error(code: str, message: str, location: Location | None = None) -> Diagnostic:
    return Diagnostic(Severity.ERROR, code, message, location or Location())


def warning(code: str, message: str, location: Location | None = None) -> Diagnostic:
    return Diagnostic(Severity.WARNING, code, message, location or Location())


def has_errors(diagnostics: list[Diagnostic]) -> bool:
    return any(d.is_error for d in diagnostics)
