"""Exception types raised across the toolkit."""

from typing import Optional


class MsfsspError(Exception):
    """Base class for all toolkit errors."""


class InstanceError(MsfsspError, ValueError):
    """Invalid problem instance, period set or instance file."""

    def __init__(self, message: str, field: Optional[str] = None):
        super().__init__(message)
        self.field = field


class RuleFileError(InstanceError):
    """Unreadable or invalid rule-table file."""


class FamilyConstructionError(InstanceError):
    """Block-family parameters violate a construction condition."""


class CapacityError(InstanceError):
    """Line longer than a fixed-size solver table allows."""


class AlphabetMismatchError(MsfsspError, ValueError):
    """A symbol is not part of the rule table's alphabet."""


class UnknownSolverError(MsfsspError, KeyError):
    """No solver registered under the requested name."""

    def __str__(self) -> str:
        # KeyError would quote the message
        return str(self.args[0]) if self.args else ""


class ConeContextError(MsfsspError, ValueError):
    """Not enough neighbour context to advance a window that many steps."""


class CollectionShortfallError(MsfsspError, AssertionError):
    """A host reached the end of a cycle without full t_c context on both sides."""


class BudgetExceededError(MsfsspError):
    """A sweep needs more instances than the configured budget allows."""

    def __init__(self, required: int, budget: int):
        super().__init__(f"sweep needs {required} instances, budget is {budget} (raise --budget)")
        self.required = required
        self.budget = budget


class HorizonExceededError(MsfsspError):
    """A run hit its step horizon before firing."""

    def __init__(self, horizon: int):
        super().__init__(f"no firing within horizon of {horizon} steps")
        self.horizon = horizon
