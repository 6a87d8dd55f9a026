"""
Exceptions to raise from family generators.
"""

from interval_impropriety.exceptions import IntervalImproprietyError


class InvalidRecipe(IntervalImproprietyError, ValueError):
    """
    Exception raised when a recipe's parameters are not valid for its kind.
    """

    def __init__(self, kind: str, message: str) -> None:
        """
        Attributes:
            kind: The family kind of the recipe.
        """
        super().__init__(f'Invalid {kind} recipe: {message}')
        self.kind = kind


class UnsupportedSize(IntervalImproprietyError, ValueError):
    """
    Exception raised when an enumerator is asked for a size outside the range
    it supports.
    """

    def __init__(self, n: int, low: int, high: int) -> None:
        """
        Attributes:
            n: The requested number of vertices.
            low: The smallest supported number of vertices.
            high: The largest supported number of vertices.
        """
        super().__init__(f'n must be in [{low}, {high}], got {n}.')
        self.n = n
        self.low = low
        self.high = high


class InvalidTrace(IntervalImproprietyError, ValueError):
    """
    Exception raised when a construction trace is inconsistent.
    """
