"""
Constants used across the package.
"""

import math
from enum import Enum, IntEnum


class FamilyKind(Enum):
    """
    Constants representing the graph families which can be generated.

    The values are the spellings used on the command line.
    """

    PATH = 'path'
    CYCLE = 'cycle'
    STAR = 'star'
    SPIDER = 'spider'
    CATERPILLAR = 'caterpillar'
    TREE = 'tree'
    WHEEL = 'wheel'
    COMPLETE = 'complete'
    COMPLETE_MULTIPARTITE = 'complete_multipartite'
    SQUARE_OF_PATH = 'square_of_path'
    TWO_PATH = 'two_path'
    FAN = 'fan'
    TWO_TREE = 'two_tree'
    MAXIMAL_OUTERPLANAR = 'maximal_outerplanar'
    ITERATED_TRIANGULATION = 'iterated_triangulation'
    CORONA = 'corona'
    STRONG_PRODUCT = 'strong_product'


class CoronaStrategy(Enum):
    """
    Ways of coloring the copies of ``H`` in a corona product ``G ⊙ H``.
    """

    PATH = 'path'
    CYCLE = 'cycle'
    STAR = 'star'
    SPIDER = 'spider'
    CATERPILLAR = 'caterpillar'
    GENERAL = 'general'
    THREE_SET = 'three-set'


class Bound(Enum):
    """
    Upper bounds on the impropriety, as functions of the maximum degree.
    """

    TWO = '2'
    CEIL_DELTA_OVER_3 = 'ceil(delta/3)'
    CEIL_DELTA_OVER_4_PLUS_1 = 'ceil(delta/4)+1'
    CEIL_DELTA_OVER_5 = 'ceil(delta/5)'
    DELTA = 'delta'

    def evaluate(self, delta: int) -> int:
        """
        Args:
            delta: The maximum degree of a graph.

        Returns:
            The value of this bound for a graph with maximum degree ``delta``.
        """
        values = {
            Bound.TWO: 2,
            Bound.CEIL_DELTA_OVER_3: math.ceil(delta / 3),
            Bound.CEIL_DELTA_OVER_4_PLUS_1: math.ceil(delta / 4) + 1,
            Bound.CEIL_DELTA_OVER_5: math.ceil(delta / 5),
            Bound.DELTA: delta,
        }
        return values[self]


class SearchStatus(Enum):
    """
    Outcomes of one exhaustive search.
    """

    FOUND = 'found'
    EXHAUSTED = 'exhausted'
    BUDGET_EXCEEDED = 'budget-exceeded'


class Undefined(Enum):
    """
    Marker for the impropriety of a coloring which is not an interval
    coloring.
    """

    NOT_AN_INTERVAL_COLORING = 'not an interval coloring'

    def __repr__(self) -> str:
        """
        Return a representation which does not include the value.
        """
        return '<{class_name}.{name}>'.format(
            class_name=self.__class__.__name__,
            name=self.name,
        )


class ExitCodes(IntEnum):
    """
    Exit codes of the command line tool.
    """

    SUCCESS = 0
    VERIFICATION_FAILED = 1
    USAGE_ERROR = 2
    BUDGET_EXCEEDED = 3


# The largest graph for which certificates are exact.
CERTIFICATE_VERTEX_LIMIT = 12

# Strong products larger than this are logged as too large for the solver.
SOLVER_VERTEX_LIMIT = 14
SOLVER_EDGE_LIMIT = 25

# Environment variable capping the number of solver worker processes.
THREADS_ENV_VAR = 'IMPROPRIETY_THREADS'
