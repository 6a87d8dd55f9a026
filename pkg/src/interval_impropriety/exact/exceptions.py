"""
Exceptions to raise from the exact solver.
"""

from interval_impropriety.exceptions import IntervalImproprietyError


class DisconnectedGraph(IntervalImproprietyError, ValueError):
    """
    Exception raised when a search which needs a connected graph is given a
    disconnected one.
    """


class InvalidImpropriety(IntervalImproprietyError, ValueError):
    """
    Exception raised when the impropriety to search for is not positive.
    """

    def __init__(self, k: int) -> None:
        """
        Attributes:
            k: The requested impropriety.
        """
        super().__init__(f'k must be at least 1, got {k}.')
        self.k = k


class InvalidBudget(IntervalImproprietyError, ValueError):
    """
    Exception raised when a search budget has a nonpositive limit.
    """


class BudgetExceeded(IntervalImproprietyError):
    """
    Exception raised when a search stops because of its node or time limit,
    before deciding.
    """

    def __init__(self, k: int, nodes: int) -> None:
        """
        Attributes:
            k: The impropriety being decided when the budget ran out.
            nodes: The number of search nodes expanded.
        """
        super().__init__(
            f'The search budget ran out while deciding k = {k} after '
            f'{nodes} nodes.',
        )
        self.k = k
        self.nodes = nodes


class UnsoundWitness(IntervalImproprietyError):
    """
    Exception raised when a coloring found by the search fails verification.
    """
