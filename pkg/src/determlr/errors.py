"""Exception hierarchy shared across the package."""

from __future__ import annotations


class DetermlrError(Exception):
    """Base class for all package-specific errors."""


class EmptyStatement(DetermlrError):
    """Raised when a statement to normalize is empty or whitespace-only."""


class SchemaError(DetermlrError):
    """A dataset record does not match the expected schema."""

    def __init__(self, message: str, record_index: int | None = None, field: str | None = None):
        self.record_index = record_index
        self.field = field
        where = f" (record {record_index})" if record_index is not None else ""
        which = f" [field: {field}]" if field else ""
        super().__init__(f"{message}{where}{which}")


class StatementParseError(DetermlrError):
    """A statement could not be parsed into the symbolic clause grammar."""

    def __init__(self, text: str, position: int, reason: str):
        self.text = text
        self.position = position
        self.reason = reason
        super().__init__(f"cannot parse {text!r} at position {position}: {reason}")


class Inconsistent(DetermlrError):
    """A knowledge base asserts both an atom and its negation."""

    def __init__(self, first, second):
        self.conflicting_pair = (first, second)
        super().__init__(f"contradictory atoms: {first} vs {second}")


class EmptyDeterminateSet(DetermlrError):
    """Primary-premise selection received an empty determinate set."""


class ExplorationFailed(DetermlrError):
    """The backend produced no parseable proposition for this iteration."""


class InternalInvariantViolation(DetermlrError):
    """An internal bookkeeping invariant was broken (always a bug)."""


class BackendUnavailable(DetermlrError):
    """The inference backend failed after exhausting retries.

    ``partial`` carries whatever results were assembled before the failure.
    """

    def __init__(self, message: str, partial=None):
        self.partial = partial
        super().__init__(message)


class AuthError(DetermlrError):
    """The chat endpoint rejected the credentials (401/403); never retried."""


class FieldNotFound(DetermlrError):
    """A labeled field was absent from a backend reply."""

    def __init__(self, label: str, text: str = ""):
        self.label = label
        self.text = text
        super().__init__(f"no field labeled {label!r} in reply")


class UnboundPlaceholder(DetermlrError):
    """A prompt template placeholder was left unbound at render time."""

    def __init__(self, name: str, template: str = ""):
        self.name = name
        self.template = template
        super().__init__(f"unbound placeholder {{{name}}} in template {template!r}")


class ReplayExhausted(DetermlrError):
    """The replay fixture has no more entries for the requested stage."""

    def __init__(self, stage: str):
        self.stage = stage
        super().__init__(f"replay fixture exhausted for stage {stage!r}")


class ReplayMismatch(DetermlrError):
    """Strict-mode replay: the live request digest differs from the fixture's."""

    def __init__(self, stage: str, expected: str, actual: str):
        self.stage = stage
        self.expected = expected
        self.actual = actual
        super().__init__(
            f"replay digest mismatch at stage {stage!r}: fixture has {expected}, request is {actual}"
        )


class ExtractionFailed(DetermlrError):
    """Premise extraction could not recover the labeled fields from the reply."""
