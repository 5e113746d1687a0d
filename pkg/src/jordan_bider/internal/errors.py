"""
Errors raised by the engines.

Everything derives from ValueError so callers that only care about
"bad input or failed check" can catch one thing. The CLI maps the
subclasses onto exit codes.
"""
from __future__ import annotations

from typing import Any


class JordanError(ValueError):
    exit_code: int = 1


class InputError(JordanError):
    """
    Malformed files, shape mismatches, unknown names and bad parameters.
    """

    exit_code = 2


class HypothesisFailure(JordanError):
    """
    A named hypothesis of a theorem does not hold for the given input,
    so the construction that depends on it is refused.
    """

    def __init__(self, hypothesis: str, detail: str = ""):
        self.hypothesis = hypothesis
        self.detail = detail
        message = f"hypothesis failed: {hypothesis}"
        if detail:
            message += f" ({detail})"
        super().__init__(message)


class VerificationFailure(JordanError):
    """
    A verifier rejected its input. The witness names the failing basis
    indices (or vector) when one is available.
    """

    def __init__(self, check: str, witness: Any = None, detail: str = ""):
        self.check = check
        self.witness = witness
        message = f"verification failed: {check}"
        if witness is not None:
            message += f" at {witness}"
        if detail:
            message += f" ({detail})"
        super().__init__(message)


class BudgetExceeded(JordanError):
    def __init__(self, estimate: int, budget: int):
        self.estimate = estimate
        self.budget = budget
        super().__init__(
            f"enumeration would check {estimate} candidate maps, budget is {budget}"
        )
