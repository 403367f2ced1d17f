"""Error types shared across the package."""

from __future__ import annotations


class DomainError(ValueError):
    """Raised when an input violates a documented model constraint.

    Carries a human-readable message naming the broken constraint; the
    command line maps it to exit code 1.
    """
