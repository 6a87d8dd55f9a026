"""
Checks shared by every colorer.
"""

import inspect
import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Mapping, Optional, Tuple

import wrapt

from interval_impropriety.coloring import EdgeColoring, verify
from interval_impropriety.graph import Graph

from .exceptions import BoundViolated

LOGGER = logging.getLogger(__name__)

Arguments = Mapping[str, Any]
BoundFunction = Callable[[Graph, Arguments], int]
GraphFunction = Callable[[Arguments], Graph]


@dataclass
class ConstructionStats:
    """
    What a colorer did besides following its construction.

    Args:
        fallbacks: For each time the exact solver stood in for a failed
            extension step, the number of edges it colored.
        base_cases: The number of subgraphs colored by the exact solver as
            base cases of a recursion.
    """

    fallbacks: List[int] = field(default_factory=list)
    base_cases: int = 0


def certified(
    bound: BoundFunction,
    graph_of: Optional[GraphFunction] = None,
) -> Callable[..., Any]:
    """
    Verify the output of a colorer against the bound it guarantees.

    The decorated colorer returns either a coloring of the graph passed as
    ``g`` (or of ``graph_of(arguments)``), or a tuple whose first two items
    are a graph and its coloring.

    Args:
        bound: Given the colored graph and the colorer's arguments by name,
            the largest impropriety the colorer guarantees.
        graph_of: Given the colorer's arguments by name, the graph a bare
            coloring is for.

    Returns:
        A decorator.
    """

    @wrapt.decorator
    def wrapper(
        wrapped: Callable[..., Any],
        instance: Any,  # pylint: disable=unused-argument
        args: Tuple[Any, ...],
        kwargs: Dict[str, Any],
    ) -> Any:
        """
        Run the colorer and raise ``BoundViolated`` if its output is not
        good enough.

        Args:
            wrapped: A colorer.
            instance: Unused.
            args: The arguments given to the colorer.
            kwargs: The keyword arguments given to the colorer.

        Returns:
            The result of calling the colorer.
        """
        bound_arguments = inspect.signature(wrapped).bind(*args, **kwargs)
        bound_arguments.apply_defaults()
        arguments = bound_arguments.arguments

        result = wrapped(*args, **kwargs)
        if isinstance(result, EdgeColoring):
            coloring = result
            if graph_of is None:
                graph = arguments['g']
            else:
                graph = graph_of(arguments)
        else:
            graph, coloring = result[0], result[1]

        report = verify(g=graph, c=coloring)
        limit = bound(graph, arguments)
        impropriety = report.impropriety
        if impropriety is None or impropriety > limit:
            raise BoundViolated(
                colorer=wrapped.__name__,
                impropriety=impropriety,
                bound=limit,
                offending_vertices=report.offending_vertices(),
            )
        LOGGER.debug(
            '%s: impropriety %d within bound %d',
            wrapped.__name__,
            impropriety,
            limit,
        )
        return result

    return wrapper
