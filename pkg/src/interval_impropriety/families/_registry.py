"""
Registration of family generators.
"""

from typing import Callable, Dict, Optional, Tuple

from interval_impropriety._constants import FamilyKind
from interval_impropriety.graph import Graph

from ._recipes import FamilyRecipe, Trace

Generator = Callable[[FamilyRecipe], Tuple[Graph, Optional[Trace]]]

GENERATORS: Dict[FamilyKind, Generator] = {}


def family(kind: FamilyKind) -> Callable[[Generator], Generator]:
    """
    Register a decorated function as the generator for a family.

    Args:
        kind: The family the function generates.

    Returns:
        A decorator which records the function and returns it unchanged.
    """

    def decorator(function: Generator) -> Generator:
        """
        Register a decorated function so that :func:`generate` finds it.
        """
        GENERATORS[kind] = function
        return function

    return decorator
