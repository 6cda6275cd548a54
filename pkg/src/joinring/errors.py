"""Exceptions shared across modules."""
from __future__ import annotations


class HypothesisError(ValueError):
    """An operation was called outside the hypotheses it needs.

    ``reason`` is a short machine-readable code such as ``"not-p-groups"``.
    """

    def __init__(self, reason: str, message: str):
        super().__init__(message)
        self.reason = reason


class NotAJoinError(ValueError):
    """A dense matrix is not a join of circulants for the given groups."""

    def __init__(self, message: str = "not a join matrix"):
        super().__init__(message)
