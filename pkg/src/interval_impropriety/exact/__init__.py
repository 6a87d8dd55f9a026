"""
Exact improprieties of small graphs by exhaustive search.
"""

from ._reference import reference_impropriety
from ._search import (
    Decision,
    KSearch,
    SearchBudget,
    SolveOutcome,
    SolveStats,
    breadth_first_edge_order,
    default_window,
    exact_impropriety,
    exists_k_improper,
    worker_count,
)

__all__ = [
    'Decision',
    'KSearch',
    'SearchBudget',
    'SolveOutcome',
    'SolveStats',
    'breadth_first_edge_order',
    'default_window',
    'exact_impropriety',
    'exists_k_improper',
    'reference_impropriety',
    'worker_count',
]
