"""Errors shared across modules."""


class BudgetExceededError(RuntimeError):
    """An enumeration outgrew its configured budget; no verdict was produced."""
