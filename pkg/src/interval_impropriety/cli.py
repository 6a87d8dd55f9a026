"""
The ``interval-impropriety`` command line tool.
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

import networkx as nx

from interval_impropriety._constants import (
    Bound,
    CoronaStrategy,
    ExitCodes,
    FamilyKind,
    SearchStatus,
)
from interval_impropriety._table import emit_table
from interval_impropriety.coloring import (
    EdgeColoring,
    coloring_to_json,
    load_coloring,
    make_coloring,
    verify,
)
from interval_impropriety.constructions import (
    color_corona,
    color_forest,
    color_iterated_triangulation,
    color_multipartite_stst,
    color_outerplanar,
    color_square_of_path,
    color_two_path,
    color_two_tree,
)
from interval_impropriety.constructions.exceptions import (
    BoundViolated,
    ExtensionFailed,
)
from interval_impropriety.exact import (
    SearchBudget,
    exact_impropriety,
    exists_k_improper,
)
from interval_impropriety.exact.exceptions import (
    BudgetExceeded,
    UnsoundWitness,
)
from interval_impropriety.exact.scan import PROVIDERS, conjecture_scan
from interval_impropriety.exceptions import (
    IntervalImproprietyError,
    NotAnIntervalColoring,
)
from interval_impropriety.families import (
    CoronaLayout,
    FamilyRecipe,
    MultipartiteLabels,
    Trace,
    TriangulationTrace,
    TwoPathSequence,
    TwoTreeTrace,
    complete,
    generate,
    recipe_to_json,
    trace_to_json,
)
from interval_impropriety.graph import (
    Graph,
    graph_to_json,
    load_graph,
    max_degree,
)

LOGGER = logging.getLogger(__name__)

_ALIASES = {'multipartite': FamilyKind.COMPLETE_MULTIPARTITE.value}

_FOREST_KINDS = frozenset(
    {
        FamilyKind.PATH,
        FamilyKind.STAR,
        FamilyKind.SPIDER,
        FamilyKind.CATERPILLAR,
        FamilyKind.TREE,
    },
)

_FAILURES = (
    BoundViolated,
    ExtensionFailed,
    NotAnIntervalColoring,
    UnsoundWitness,
)


def _family(value: str) -> FamilyKind:
    try:
        return FamilyKind(_ALIASES.get(value, value))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(
            f'unknown family {value!r}',
        ) from exc


def _integers(value: str) -> List[int]:
    try:
        return [int(item) for item in value.split(',') if item]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(
            f'expected comma separated integers, got {value!r}',
        ) from exc


def _add_family_arguments(
    parser: argparse.ArgumentParser,
    required: bool,
) -> None:
    parser.add_argument(
        '--family',
        type=_family,
        required=required,
        help=(
            'One of '
            + ', '.join(kind.value for kind in FamilyKind)
            + ', or multipartite.'
        ),
    )
    for name in ('n', 's', 't', 'ell', 'seed'):
        parser.add_argument(f'--{name}', type=int)
    parser.add_argument('--legs', type=_integers, help='Spider leg lengths.')
    parser.add_argument(
        '--leaves',
        type=_integers,
        help='Leaves at each caterpillar spine vertex.',
    )
    parser.add_argument(
        '--parts',
        type=_integers,
        help='Part sizes of a complete multipartite graph.',
    )
    parser.add_argument(
        '--example',
        action='store_true',
        help='Use the fixed example 2-path.',
    )
    parser.add_argument('--base', type=_family, help='G of a product.')
    parser.add_argument('--base-n', type=int)
    parser.add_argument('--h', type=_family, help='H of a product.')
    parser.add_argument('--h-n', type=int)


def _add_budget_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--max-nodes', type=int)
    parser.add_argument('--time-limit', type=float, help='Seconds.')


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='interval-impropriety',
        description='Improper interval edge-colorings of graphs.',
    )
    parser.add_argument(
        '-v',
        '--verbose',
        action='count',
        default=0,
        help='Log more; repeat for debug output.',
    )
    commands = parser.add_subparsers(dest='command', required=True)

    gen = commands.add_parser('gen', help='Generate a graph.')
    _add_family_arguments(parser=gen, required=True)
    gen.add_argument('--out', type=Path)

    color = commands.add_parser('color', help='Color a generated graph.')
    _add_family_arguments(parser=color, required=True)
    _add_budget_arguments(parser=color)
    color.add_argument(
        '--strategy',
        type=CoronaStrategy,
        choices=list(CoronaStrategy),
        metavar='{' + ','.join(s.value for s in CoronaStrategy) + '}',
    )
    color.add_argument('--table', action='store_true')
    color.add_argument('--out', type=Path)

    verify_command = commands.add_parser('verify', help='Check a coloring.')
    verify_command.add_argument('--graph', type=Path, required=True)
    verify_command.add_argument('--coloring', type=Path, required=True)
    verify_command.add_argument('--bound', type=Bound, choices=list(Bound))

    solve = commands.add_parser('solve', help='Find the exact impropriety.')
    solve.add_argument('--graph', type=Path)
    _add_family_arguments(parser=solve, required=False)
    _add_budget_arguments(parser=solve)
    solve.add_argument('--k', type=int)
    solve.add_argument('--out', type=Path)

    scan = commands.add_parser('scan', help='Check a bound on a family.')
    scan.add_argument('--family', choices=sorted(PROVIDERS), required=True)
    scan.add_argument(
        '--bound',
        type=Bound,
        choices=list(Bound),
        required=True,
    )
    scan.add_argument('--max-n', type=int, default=6)
    _add_budget_arguments(parser=scan)
    scan.add_argument('--out', type=Path)

    table = commands.add_parser('table', help='Print a multipartite table.')
    for name in ('s', 't', 'ell'):
        table.add_argument(f'--{name}', type=int, required=True)
    table.add_argument('--symbolic', action='store_true')
    table.add_argument('--out', type=Path)
    return parser


def _nested(
    kind: Optional[FamilyKind],
    n: Optional[int],
    args: argparse.Namespace,
) -> Optional[FamilyRecipe]:
    if kind is None:
        return None
    params: Dict[str, Any] = {}
    if n is not None:
        params['n'] = n
    if kind is FamilyKind.SPIDER and args.legs is not None:
        params['legs'] = args.legs
    if kind is FamilyKind.CATERPILLAR and args.leaves is not None:
        params['leaves'] = args.leaves
    return FamilyRecipe(kind=kind, params=params)


def _recipe(args: argparse.Namespace) -> FamilyRecipe:
    """
    Build a recipe from the family arguments.
    """
    params: Dict[str, Any] = {}
    for name in ('n', 's', 't', 'ell', 'seed', 'legs', 'leaves', 'parts'):
        value = getattr(args, name)
        if value is not None:
            params[name] = value
    if args.example:
        params['example'] = True

    nested = {
        'g': _nested(kind=args.base, n=args.base_n, args=args),
        'h': _nested(kind=args.h, n=args.h_n, args=args),
    }
    for name, recipe in nested.items():
        if recipe is not None:
            params[name] = recipe
    return FamilyRecipe(kind=args.family, params=params)


def _budget(args: argparse.Namespace) -> SearchBudget:
    limits: Dict[str, Any] = {}
    if args.max_nodes is not None:
        limits['max_nodes'] = args.max_nodes
    if args.time_limit is not None:
        limits['time_limit'] = args.time_limit
    return SearchBudget(**limits)


def _write(text: str, out: Optional[Path]) -> None:
    if out is None:
        sys.stdout.write(text + '\n')
    else:
        out.write_text(text + '\n')


def _base_coloring(g: Graph, budget: SearchBudget) -> EdgeColoring:
    if nx.is_forest(g.to_networkx()):
        return color_forest(g=g)
    return exact_impropriety(g=g, budget=budget).witness


def _construct(
    recipe: FamilyRecipe,
    g: Graph,
    trace: Optional[Trace],
    strategy: Optional[CoronaStrategy],
    budget: SearchBudget,
) -> Tuple[EdgeColoring, Optional[MultipartiteLabels]]:
    """
    Color a generated graph with the construction for its family, or with
    the exact solver when there is none.
    """
    kind = recipe.kind
    if kind in _FOREST_KINDS:
        return color_forest(g=g), None
    if kind is FamilyKind.COMPLETE_MULTIPARTITE and 'ell' in recipe.params:
        _, coloring, plan = color_multipartite_stst(
            s=recipe.params['s'],
            t=recipe.params['t'],
            ell=recipe.params['ell'],
        )
        return coloring, plan.labels
    if kind is FamilyKind.TWO_TREE:
        assert isinstance(trace, TwoTreeTrace)
        return color_two_tree(g=g, trace=trace), None
    if kind is FamilyKind.SQUARE_OF_PATH:
        _, coloring = color_square_of_path(n=recipe.params['n'])
        return coloring, None
    if kind in (FamilyKind.TWO_PATH, FamilyKind.FAN):
        assert isinstance(trace, TwoPathSequence)
        _, coloring = color_two_path(seq=trace)
        return coloring, None
    if kind is FamilyKind.MAXIMAL_OUTERPLANAR:
        return color_outerplanar(g=g), None
    if kind is FamilyKind.ITERATED_TRIANGULATION:
        assert isinstance(trace, TriangulationTrace)
        return color_iterated_triangulation(trace=trace), None
    if kind is FamilyKind.WHEEL:
        assert isinstance(trace, CoronaLayout)
        h_recipe = FamilyRecipe(
            kind=FamilyKind.CYCLE,
            params={'n': recipe.params['n'] - 1},
        )
        coloring = color_corona(
            g=complete(n=1),
            g_coloring=make_coloring(colors=[]),
            h_recipe=h_recipe,
            layout=trace,
            strategy=strategy,
        )
        return coloring, None
    if kind is FamilyKind.CORONA:
        assert isinstance(trace, CoronaLayout)
        base, _ = generate(recipe=recipe.get_recipe('g'))
        coloring = color_corona(
            g=base,
            g_coloring=_base_coloring(g=base, budget=budget),
            h_recipe=recipe.get_recipe('h'),
            layout=trace,
            strategy=strategy,
        )
        return coloring, None

    LOGGER.info('No construction for %s; using the exact solver.', kind.value)
    return exact_impropriety(g=g, budget=budget).witness, None


def _gen(args: argparse.Namespace) -> int:
    recipe = _recipe(args=args)
    graph, trace = generate(recipe=recipe)
    document = {
        'graph': graph_to_json(g=graph),
        'recipe': recipe_to_json(recipe=recipe),
        'trace': trace_to_json(trace=trace),
    }
    _write(text=json.dumps(document), out=args.out)
    return ExitCodes.SUCCESS


def _color(args: argparse.Namespace) -> int:
    recipe = _recipe(args=args)
    graph, trace = generate(recipe=recipe)
    coloring, labels = _construct(
        recipe=recipe,
        g=graph,
        trace=trace,
        strategy=args.strategy,
        budget=_budget(args=args),
    )
    report = verify(g=graph, c=coloring)
    if not report.all_intervals:
        raise NotAnIntervalColoring(vertices=report.offending_vertices())

    if args.table:
        text = emit_table(g=graph, c=coloring, labels=labels)
    else:
        document = {
            'graph': graph_to_json(g=graph),
            'coloring': coloring_to_json(c=coloring),
            'impropriety': report.impropriety,
        }
        text = json.dumps(document)
    _write(text=text, out=args.out)
    return ExitCodes.SUCCESS


def _verify(args: argparse.Namespace) -> int:
    graph = load_graph(text=args.graph.read_text())
    coloring = load_coloring(text=args.coloring.read_text())
    report = verify(g=graph, c=coloring)
    if report.impropriety is None:
        listed = ', '.join(str(v) for v in report.offending_vertices())
        message = f'not an interval coloring at vertices: {listed}'
        _write(text=message, out=None)
        return ExitCodes.VERIFICATION_FAILED

    _write(text=f'impropriety = {report.impropriety}', out=None)
    if args.bound is None:
        return ExitCodes.SUCCESS
    limit = args.bound.evaluate(delta=max_degree(g=graph))
    holds = report.impropriety <= limit
    verdict = 'holds' if holds else 'violated'
    _write(text=f'bound {args.bound.value} = {limit} {verdict}', out=None)
    return ExitCodes.SUCCESS if holds else ExitCodes.VERIFICATION_FAILED


def _solve(args: argparse.Namespace) -> int:
    if args.graph is not None:
        graph = load_graph(text=args.graph.read_text())
    elif args.family is not None:
        graph, _ = generate(recipe=_recipe(args=args))
    else:
        raise ValueError('Give either --graph or --family.')

    budget = _budget(args=args)
    if args.k is None:
        outcome = exact_impropriety(g=graph, budget=budget)
        _write(text=f'mu_int = {outcome.impropriety}', out=None)
        witness: Optional[EdgeColoring] = outcome.witness
        code = ExitCodes.SUCCESS
    else:
        decision = exists_k_improper(g=graph, k=args.k, budget=budget)
        _write(text=f'k = {args.k}: {decision.status.value}', out=None)
        witness = decision.witness
        code = ExitCodes.SUCCESS
        if decision.status is SearchStatus.BUDGET_EXCEEDED:
            code = ExitCodes.BUDGET_EXCEEDED

    if witness is not None and args.out is not None:
        _write(text=json.dumps(coloring_to_json(c=witness)), out=args.out)
    return code


def _scan(args: argparse.Namespace) -> int:
    instances = PROVIDERS[args.family](args.max_n)
    report = conjecture_scan(
        instances=instances,
        bound=args.bound,
        budget=_budget(args=args),
    )
    _write(text=report.to_csv().rstrip('\n'), out=args.out)
    LOGGER.info('Scan summary:\n%s', report.summary())
    if report.counterexamples():
        return ExitCodes.VERIFICATION_FAILED
    if report.over_budget():
        return ExitCodes.BUDGET_EXCEEDED
    return ExitCodes.SUCCESS


def _table(args: argparse.Namespace) -> int:
    graph, coloring, plan = color_multipartite_stst(
        s=args.s,
        t=args.t,
        ell=args.ell,
    )
    if args.symbolic:
        text = plan.symbolic()
    else:
        text = emit_table(g=graph, c=coloring, labels=plan.labels)
    _write(text=text, out=args.out)
    return ExitCodes.SUCCESS


_COMMANDS = {
    'gen': _gen,
    'color': _color,
    'verify': _verify,
    'solve': _solve,
    'scan': _scan,
    'table': _table,
}


def run(argv: Sequence[str]) -> int:
    """
    Run one command.

    Args:
        argv: The arguments, without the program name.

    Returns:
        The exit code: 0 on success, 1 when a coloring or bound check fails,
        2 for invalid input and 3 when the search budget runs out.
    """
    parser = _parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        return int(exc.code or 0)

    levels = {0: logging.WARNING, 1: logging.INFO}
    logging.basicConfig(
        level=levels.get(args.verbose, logging.DEBUG),
        stream=sys.stderr,
        format='%(levelname)s %(name)s: %(message)s',
    )

    try:
        return int(_COMMANDS[args.command](args))
    except BudgetExceeded as exc:
        sys.stderr.write(f'{exc}\n')
        return ExitCodes.BUDGET_EXCEEDED
    except _FAILURES as exc:
        sys.stderr.write(f'{exc}\n')
        return ExitCodes.VERIFICATION_FAILED
    except (IntervalImproprietyError, ValueError, OSError) as exc:
        sys.stderr.write(f'{exc}\n')
        return ExitCodes.USAGE_ERROR


def main() -> None:
    """
    Entry point of the console script.
    """
    sys.exit(run(argv=sys.argv[1:]))
