"""Exception hierarchy. The CLI maps every CentrumError to exit code 2."""

from __future__ import annotations


class CentrumError(Exception):
    """Base class for all library errors."""


class DimensionError(CentrumError):
    """Raised when operation tables have the wrong shape or out-of-range entries."""


class AxiomError(CentrumError):
    """Raised when tables violate a ring axiom."""

    def __init__(self, axiom: str, witness: tuple[int, ...], detail: str = ""):
        self.axiom = axiom
        self.witness = witness
        msg = f"{axiom} violated at {witness}"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class SubsetError(CentrumError):
    """Raised when a subset lacks the closure an operation requires (e.g. not a right ideal)."""


class OrderCapError(CentrumError):
    """Raised when a ring or enumeration would exceed a configured order cap."""


class ExprSyntaxError(CentrumError):
    """Raised when a construction expression cannot be parsed."""


class BuildError(CentrumError):
    """Raised when a well-formed construction cannot produce a ring."""


class UnknownElementError(CentrumError):
    """Raised when an element name is not in the ring's names table."""

    def __init__(self, name: str, near: list[str]):
        self.name = name
        self.near = near
        hint = f" (did you mean: {', '.join(near)})" if near else ""
        super().__init__(f"Unknown element name: {name!r}{hint}")


class TableFormatError(CentrumError):
    """Raised when a ring table file is malformed."""


class BudgetExceededError(CentrumError):
    """Raised when a bounded search would exceed the configured step budget."""

    def __init__(self, attempted: int, budget: int, what: str = "search"):
        self.attempted = attempted
        self.budget = budget
        super().__init__(f"{what} needs {attempted} steps, budget is {budget}")


class HypothesisNotMetError(CentrumError):
    """Raised when a check is called on a ring outside its hypothesis."""


class UnknownTheoremError(CentrumError):
    """Raised when a theorem id is not registered."""
