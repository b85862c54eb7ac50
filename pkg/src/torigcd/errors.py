"""Exception taxonomy shared across the package.

ParseError covers malformed text input; HypothesisError covers violated
theorem hypotheses (the CLI maps them to distinct exit codes).  A
HypothesisError carries a JSON-serializable certificate explaining the
rejection.
"""

from __future__ import annotations


class ParseError(ValueError):
    """Malformed expression or literal."""


class HypothesisError(ValueError):
    """A required hypothesis fails; .certificate documents why."""

    def __init__(self, message: str, certificate: dict | None = None):
        super().__init__(message)
        self.certificate = certificate or {}
