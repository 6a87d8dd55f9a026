"""
Tests for colorings of corona products.
"""

import math
from typing import Any, Dict, Optional

import pytest

from interval_impropriety._constants import CoronaStrategy, FamilyKind
from interval_impropriety.coloring import make_coloring, verify
from interval_impropriety.constructions import color_corona, default_strategy
from interval_impropriety.constructions.exceptions import PreconditionFailed
from interval_impropriety.exact import SearchBudget, exact_impropriety
from interval_impropriety.families import (
    FamilyRecipe,
    complete,
    corona,
    cycle,
    generate,
    path,
)
from interval_impropriety.graph import Graph, max_degree
from tests.interval_impropriety.utils.assertions import (
    assert_interval_coloring,
)

_BASES = {
    'P4': path(n=4),
    'C4': cycle(n=4),
    'C5': cycle(n=5),
    'K4': complete(n=4),
}

_RECIPES = {
    'path': (FamilyKind.PATH, {'n': 5}),
    'cycle-even': (FamilyKind.CYCLE, {'n': 6}),
    'cycle-odd': (FamilyKind.CYCLE, {'n': 5}),
    'triangle': (FamilyKind.CYCLE, {'n': 3}),
    'star': (FamilyKind.STAR, {'n': 4}),
    'spider': (FamilyKind.SPIDER, {'legs': [2, 1, 3, 2]}),
    'caterpillar': (FamilyKind.CATERPILLAR, {'leaves': [1, 3, 0, 2]}),
}


def _color(
    g: Graph,
    h_recipe: FamilyRecipe,
    budget: SearchBudget,
    strategy: Optional[CoronaStrategy] = None,
) -> int:
    """
    Color ``G ⊙ H`` and return the impropriety of the coloring.
    """
    h, _ = generate(recipe=h_recipe)
    graph, layout = corona(g=g, h=h)
    base = exact_impropriety(g=g, budget=budget).witness
    coloring = color_corona(
        g=g,
        g_coloring=base,
        h_recipe=h_recipe,
        layout=layout,
        strategy=strategy,
    )
    report = assert_interval_coloring(g=graph, c=coloring)
    assert report.impropriety is not None
    return report.impropriety


class TestFamilyStrategies:
    """
    Tests for the strategies for paths, cycles, stars, spiders and
    caterpillars.
    """

    @pytest.mark.parametrize('base_name', sorted(_BASES))
    @pytest.mark.parametrize('recipe_name', sorted(_RECIPES))
    def test_at_most_two(
        self,
        base_name: str,
        recipe_name: str,
        budget: SearchBudget,
    ) -> None:
        """
        The impropriety is at most ``max(2, μ(G))``.
        """
        g = _BASES[base_name]
        kind, params = _RECIPES[recipe_name]
        recipe = FamilyRecipe(kind=kind, params=params)
        mu_g = exact_impropriety(g=g, budget=budget).impropriety
        impropriety = _color(g=g, h_recipe=recipe, budget=budget)
        assert impropriety <= max(2, mu_g)

    def test_triangle_with_pendant_edges(self) -> None:
        """
        ``C_3 ⊙ P_2`` with every edge of the triangle colored 1.
        """
        g = cycle(n=3)
        recipe = FamilyRecipe(kind=FamilyKind.PATH, params={'n': 2})
        h, _ = generate(recipe=recipe)
        graph, layout = corona(g=g, h=h)
        coloring = color_corona(
            g=g,
            g_coloring=make_coloring(colors=[1, 1, 1]),
            h_recipe=recipe,
            layout=layout,
        )
        assert coloring.colors == (1, 1, 1, 2, 2, 3, 2, 2, 3, 2, 2, 3)
        assert verify(g=graph, c=coloring).impropriety == 2

    def test_isolated_base_vertex(self) -> None:
        """
        The wheel ``W_6`` is ``K_1 ⊙ C_5``, colored from the empty coloring.
        """
        recipe = FamilyRecipe(kind=FamilyKind.CYCLE, params={'n': 5})
        h, _ = generate(recipe=recipe)
        g = complete(n=1)
        graph, layout = corona(g=g, h=h)
        coloring = color_corona(
            g=g,
            g_coloring=make_coloring(colors=[]),
            h_recipe=recipe,
            layout=layout,
        )
        assert_interval_coloring(g=graph, c=coloring, max_impropriety=2)


class TestGeneralStrategies:
    """
    Tests for the strategies which color any ``H``.
    """

    @pytest.mark.parametrize('base_name', sorted(_BASES))
    def test_general(self, base_name: str, budget: SearchBudget) -> None:
        """
        The general strategy stays within ``max(μ(G), |V(H)|)``.
        """
        g = _BASES[base_name]
        recipe = FamilyRecipe(kind=FamilyKind.COMPLETE, params={'n': 4})
        mu_g = exact_impropriety(g=g, budget=budget).impropriety
        impropriety = _color(
            g=g,
            h_recipe=recipe,
            budget=budget,
            strategy=CoronaStrategy.GENERAL,
        )
        assert impropriety <= max(mu_g, 4)

    @pytest.mark.parametrize('base_name', sorted(_BASES))
    @pytest.mark.parametrize(
        'kind, params',
        [
            (FamilyKind.COMPLETE, {'n': 4}),
            (FamilyKind.COMPLETE, {'n': 6}),
            (FamilyKind.TREE, {'n': 7, 'seed': 3}),
        ],
    )
    def test_three_set(
        self,
        base_name: str,
        kind: FamilyKind,
        params: Dict[str, Any],
        budget: SearchBudget,
    ) -> None:
        """
        The three-set strategy stays within
        ``max(μ(G), ceil(|V(H)|/3), Δ(H) + 1)``.
        """
        g = _BASES[base_name]
        recipe = FamilyRecipe(kind=kind, params=params)
        h, _ = generate(recipe=recipe)
        mu_g = exact_impropriety(g=g, budget=budget).impropriety
        impropriety = _color(
            g=g,
            h_recipe=recipe,
            budget=budget,
            strategy=CoronaStrategy.THREE_SET,
        )
        bound = max(
            mu_g,
            math.ceil(h.vertex_count / 3),
            max_degree(g=h) + 1,
        )
        assert impropriety <= bound

    def test_three_set_small(self, budget: SearchBudget) -> None:
        """
        The three-set strategy needs ``H`` to have three vertices.
        """
        with pytest.raises(PreconditionFailed):
            _color(
                g=path(n=3),
                h_recipe=FamilyRecipe(kind=FamilyKind.PATH, params={'n': 2}),
                budget=budget,
                strategy=CoronaStrategy.THREE_SET,
            )


class TestPreconditions:
    """
    Tests for inputs which the corona colorer rejects.
    """

    def test_default_strategy(self) -> None:
        """
        Families without their own strategy use the general one.
        """
        assert default_strategy(kind=FamilyKind.CYCLE) is CoronaStrategy.CYCLE
        assert default_strategy(kind=FamilyKind.COMPLETE) is (
            CoronaStrategy.GENERAL
        )

    def test_too_many_legs(self, budget: SearchBudget) -> None:
        """
        The spider strategy colors spiders with at most four legs.
        """
        recipe = FamilyRecipe(
            kind=FamilyKind.SPIDER,
            params={'legs': [1, 1, 1, 1, 1]},
        )
        with pytest.raises(PreconditionFailed):
            _color(g=path(n=2), h_recipe=recipe, budget=budget)

    def test_strategy_mismatch(self, budget: SearchBudget) -> None:
        """
        A family strategy only colors its own family.
        """
        recipe = FamilyRecipe(kind=FamilyKind.CYCLE, params={'n': 4})
        with pytest.raises(PreconditionFailed):
            _color(
                g=path(n=2),
                h_recipe=recipe,
                budget=budget,
                strategy=CoronaStrategy.PATH,
            )

    def test_not_interval(self, four_path: Graph) -> None:
        """
        The coloring of ``G`` must be an interval coloring.
        """
        recipe = FamilyRecipe(kind=FamilyKind.PATH, params={'n': 2})
        h, _ = generate(recipe=recipe)
        _, layout = corona(g=four_path, h=h)
        with pytest.raises(PreconditionFailed):
            color_corona(
                g=four_path,
                g_coloring=make_coloring(colors=[1, 2, 4]),
                h_recipe=recipe,
                layout=layout,
            )

    def test_layout_mismatch(self, four_path: Graph) -> None:
        """
        The layout must come from ``G`` and ``H``.
        """
        recipe = FamilyRecipe(kind=FamilyKind.PATH, params={'n': 3})
        _, layout = corona(g=four_path, h=path(n=2))
        with pytest.raises(PreconditionFailed):
            color_corona(
                g=four_path,
                g_coloring=make_coloring(colors=[1, 2, 3]),
                h_recipe=recipe,
                layout=layout,
            )
