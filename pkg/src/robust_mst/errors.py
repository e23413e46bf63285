"""
Exception hierarchy for the robust spanning tree solver.
"""

from typing import Any, Optional


class RobustMSTError(Exception):
    """Base exception for all solver errors."""
    pass


# Graph errors

class DisconnectedGraph(RobustMSTError):
    """The graph (or the allowed edge subset) does not span all vertices."""
    pass


class TooManyTrees(RobustMSTError):
    """Spanning tree enumeration would exceed the configured limit."""

    def __init__(self, limit: int, count: Optional[int] = None):
        self.limit = limit
        self.count = count
        detail = f" (graph has {count} spanning trees)" if count is not None else ""
        super().__init__(f"Spanning tree count exceeds limit {limit}{detail}")


class NotASpanningTree(RobustMSTError):
    """An edge set passed as a tree is not a spanning tree of the graph."""
    pass


# Instance errors

class SchemaError(RobustMSTError):
    """An instance or report document does not match its schema."""

    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path}: {message}")


class RowLengthMismatch(RobustMSTError):
    """A cost row does not have one entry per edge."""

    def __init__(self, row: str, expected: int, actual: int):
        self.row = row
        self.expected = expected
        self.actual = actual
        super().__init__(f"{row} has length {actual}, expected {expected}")


class NegativeCosts(RobustMSTError):
    """The operation requires nonnegative costs."""
    pass


class InvalidTwoStageSolution(RobustMSTError):
    """A 2-stage solution violates its structural invariants."""

    def __init__(self, scenario: Optional[int], message: str):
        self.scenario = scenario
        where = f"scenario {scenario}: " if scenario is not None else ""
        super().__init__(f"{where}{message}")


# LP errors

class NumericalFailure(RobustMSTError):
    """The LP backend failed or the cutting-plane loop hit its cap."""
    pass


# Rounding errors

class ParamsInadmissible(RobustMSTError):
    """Bound parameters violate the admissibility condition."""
    pass


class IncompatibleSolution(RobustMSTError):
    """A fractional solution lacks the rows an algorithm needs."""
    pass


class RestartsExhausted(RobustMSTError):
    """Randomized rounding failed to connect after every restart."""

    def __init__(self, attempts: int, last_outcome: Any = None):
        self.attempts = attempts
        self.last_outcome = last_outcome
        super().__init__(f"Rounding did not produce a spanning tree in {attempts} attempts")


# Exact solver errors

class InstanceTooLarge(RobustMSTError):
    """The instance is beyond the exact solver's size limit."""
    pass


class TimeLimitExceeded(RobustMSTError):
    """The search ran out of time; carries the best incumbent found."""

    def __init__(self, incumbent: Any, time_limit: float):
        self.incumbent = incumbent
        self.time_limit = time_limit
        super().__init__(f"Time limit of {time_limit:.1f}s exceeded")


# Generator errors

class ScenarioBlowup(RobustMSTError):
    """The construction would create more scenarios than the cap allows."""

    def __init__(self, count: int, cap: int):
        self.count = count
        self.cap = cap
        super().__init__(f"Construction needs {count} scenarios, cap is {cap}")


class LabelingNotTotal(RobustMSTError):
    """A labeling leaves some Label Cover edge unsatisfied."""
    pass


class AssignmentDoesNotSatisfy(RobustMSTError):
    """A truth assignment leaves some clause false."""
    pass


class NotACover(RobustMSTError):
    """A subcollection does not cover the ground set."""
    pass


class SolutionUsesForbiddenEdge(RobustMSTError):
    """A 2-stage solution uses an edge priced above the cover size bound."""
    pass


class ParamsInfeasible(RobustMSTError):
    """Generator parameters admit no instance."""
    pass


# CLI errors

class IncompatibleAlgorithm(RobustMSTError):
    """The requested algorithm cannot handle the instance kind."""
    pass
