"""
Exceptions to raise from colorers.
"""

from typing import Optional, Tuple

from interval_impropriety.exceptions import IntervalImproprietyError


class PreconditionFailed(IntervalImproprietyError, ValueError):
    """
    Exception raised when a colorer is given a graph or parameters outside
    the class it colors.
    """


class TraceMismatch(PreconditionFailed):
    """
    Exception raised when a construction trace does not build the given
    graph.
    """


class NotOuterplanar(PreconditionFailed):
    """
    Exception raised when the outerplanar colorer finds a reduction step
    which exists in every outerplanar graph to be missing.
    """


class BoundViolated(IntervalImproprietyError):
    """
    Exception raised when a colorer's output is not an interval coloring or
    has a larger impropriety than the colorer guarantees.
    """

    def __init__(
        self,
        colorer: str,
        impropriety: Optional[int],
        bound: int,
        offending_vertices: Tuple[int, ...],
    ) -> None:
        """
        Attributes:
            colorer: The name of the colorer.
            impropriety: The impropriety of the output, or ``None`` when it
                is not an interval coloring.
            bound: The guaranteed bound.
            offending_vertices: Vertices whose colors are not an interval.
        """
        if impropriety is None:
            message = (
                f'{colorer} returned a coloring which is not an interval '
                f'coloring at vertices {list(offending_vertices)}.'
            )
        else:
            message = (
                f'{colorer} returned a coloring with impropriety '
                f'{impropriety}, above its bound {bound}.'
            )
        super().__init__(message)
        self.colorer = colorer
        self.impropriety = impropriety
        self.bound = bound
        self.offending_vertices = offending_vertices


class ExtensionFailed(IntervalImproprietyError):
    """
    Exception raised when neither a colorer's extension rule nor the exact
    solver can extend a partial coloring within the colorer's bound.
    """
