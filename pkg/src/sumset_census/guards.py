"""Resource guards shared by the enumeration routines.

Every exhaustive sweep in this package is bounded up front: the number of
subsets a census may visit and the number of compositions a profile may
enumerate are checked against explicit budgets before any work starts.
Budgets can be raised per call or through environment variables; exceeding
one is always a loud failure that names the required budget, never a silent
truncation.
"""

from __future__ import annotations

import os

MAX_SUBSETS_ENV = "SUMSET_MAX_SUBSETS"
MAX_COMPOSITIONS_ENV = "SUMSET_MAX_COMPOSITIONS"

DEFAULT_MAX_SUBSETS = 100_000_000
DEFAULT_MAX_COMPOSITIONS = 10_000_000

# A dense sumset bitmap spans h*(max(A)-min(A))+1 cells; this cap keeps a
# single profile call well under ~12 MB.
DEFAULT_MAX_BITMAP_BITS = 100_000_000


class BudgetExceededError(RuntimeError):
    """Raised when a sweep would exceed its subset/composition/memory budget."""

    def __init__(self, what: str, required: int, limit: int, env: str | None = None):
        self.what = what
        self.required = required
        self.limit = limit
        hint = f" (override via {env} or an explicit limit argument)" if env else ""
        super().__init__(
            f"{what} requires budget {required}, limit is {limit}{hint}"
        )


class LemmaViolationError(RuntimeError):
    """Raised when a machine check contradicts a proved statement.

    Reaching this error means either an implementation bug or a genuine
    counterexample; both deserve a crash, not a log line.
    """


def _env_budget(env: str, default: int) -> int:
    raw = os.environ.get(env)
    if raw is None:
        return default
    try:
        value = int(raw)
    except ValueError as exc:
        raise ValueError(f"{env} must be an integer, got {raw!r}") from exc
    if value < 1:
        raise ValueError(f"{env} must be positive, got {value}")
    return value


def subset_budget(override: int | None = None) -> int:
    """Current limit on subsets a single census sweep may enumerate."""
    if override is not None:
        return override
    return _env_budget(MAX_SUBSETS_ENV, DEFAULT_MAX_SUBSETS)


def composition_budget(override: int | None = None) -> int:
    """Current limit on compositions a single profile may enumerate."""
    if override is not None:
        return override
    return _env_budget(MAX_COMPOSITIONS_ENV, DEFAULT_MAX_COMPOSITIONS)


def require_budget(what: str, required: int, limit: int, env: str | None = None) -> None:
    if required > limit:
        raise BudgetExceededError(what, required, limit, env)
