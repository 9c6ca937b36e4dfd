"""
Command line front end of the workbench.

Every subcommand runs inside the Workbench thread so that SIGINT/SIGTERM stop a sweep between
partitions.  Results are written as JSON (or CSV) to stdout or atomically to --output.

Exit status: 0 verified or success, 2 falsified, 3 vacuous, 1 usage, capacity or other error.
"""
import argparse
import csv
import io
import json
import logging
import sys
from typing import Callable, Dict, List, Optional

from assemblyline import odm

from graphbench_core.bipartite.bihole import BOTH_SIDES, ONE_SIDED, asymptotic_bihole_bound, bihole_threshold, \
    max_bihole
from graphbench_core.bipartite.coloring import equitable_chromatic_number, equitable_color
from graphbench_core.bipartite.cycles import CYCLE_BOUNDS, check_cycle_bounds
from graphbench_core.bipartite.embedding import find_embedding
from graphbench_core.bipartite.paths import path_through_all_b
from graphbench_core.bipartite.unmixed import is_unmixed
from graphbench_core.chain.diagnostics import diagnostics
from graphbench_core.chain.sample import ndjson, near_regular, sample
from graphbench_core.chain.states import MarginSpec, ScoreSpec
from graphbench_core.competition.cover import min_edge_clique_cover, tripartite_clique_cover
from graphbench_core.competition.kappa import multipartite_bounds, multipartite_kappa_formula, tripartite_kappa
from graphbench_core.competition.oracle import kappa_oracle
from graphbench_core.config import MODULE_LIMITS, Caps, RunConfig, load_config, set_caps, validate_caps
from graphbench_core.cover.claims import COVERING_CHECKS, verify_covering
from graphbench_core.cover.decomposition import canonical_decomposition
from graphbench_core.cover.meps import enumerate_meps, exterior_dimension
from graphbench_core.cover.relation import read_relation_file
from graphbench_core.errors import GraphbenchError, PreconditionError, UndefinedIndexError, UsageError
from graphbench_core.files import atomic_write
from graphbench_core.graph.codec import read_graph_file, to_graph6
from graphbench_core.graph.graph import Graph, bipartition
from graphbench_core.invariants.indices import INDEX_NAMES, UNDEFINED, compute_index
from graphbench_core.server_base import WorkbenchBase
from graphbench_core.spectral.moments import first_divergence, s_order_compare, s_order_moments, spectral_moments
from graphbench_core.trees.enumerate import TreeClass, enumerate_trees
from graphbench_core.trees.extremal import EXTREMAL_INDICES, extremal_search
from graphbench_core.trees.majorization import majorization_chain
from graphbench_core.verification.registry import list_claims, verify, verify_all
from graphbench_core.verification.report import FALSIFIED, VACUOUS, VERIFIED, aggregate_status
from graphbench_core.verification.sweep import Sweeper

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_FALSIFIED = 2
EXIT_VACUOUS = 3

STATUS_EXIT = {VERIFIED: EXIT_OK, FALSIFIED: EXIT_FALSIFIED, VACUOUS: EXIT_VACUOUS}

CAP_FLAGS = ('max_n', 'max_delta', 'max_p', 'max_q', 'kmax', 'max_states', 'samples', 'steps')


class ArgumentParser(argparse.ArgumentParser):
    """Raises UsageError instead of exiting with status 2, which is reserved for falsification."""
    def error(self, message):
        raise UsageError(message)


def integers(text: str) -> List[int]:
    try:
        return [int(value) for value in text.split(',') if value.strip()]
    except ValueError:
        raise UsageError(f"Expected comma separated integers, got {text!r}")


def check_order(g: Graph, module: str):
    validate_caps(Caps({'max_n': g.n}), module)


class Workbench(WorkbenchBase):
    def __init__(self, args: argparse.Namespace, config: RunConfig, logger: logging.Logger = None,
                 stdout=None):
        super().__init__('graphbench.workbench', logger, config=config)
        self.args = args
        self.stdout = stdout or sys.stdout
        self.exit_code = EXIT_OK
        self.sweeper = Sweeper(config.workers, running=lambda: bool(self.running), logger=self.log)

    def try_run(self):
        self.exit_code = COMMANDS[self.args.command](self)

    # Output

    def emit(self, payload, csv_rows: Optional[List[Dict]] = None):
        if isinstance(payload, odm.Model):
            payload = payload.as_primitives()
        if self.config.format == 'csv':
            text = self._csv(csv_rows if csv_rows is not None else [flatten(payload)])
        else:
            text = json.dumps(payload, indent=2, sort_keys=True) + '\n'
        self.write(text)

    def write(self, text: str):
        if self.config.output:
            atomic_write(self.config.output, text)
            self.log.info(f"Wrote {self.config.output}")
        else:
            self.stdout.write(text)

    @staticmethod
    def _csv(rows: List[Dict]) -> str:
        columns = sorted({column for row in rows for column in row})
        buffer = io.StringIO()
        writer = csv.DictWriter(buffer, fieldnames=columns, lineterminator='\n')
        writer.writeheader()
        writer.writerows(rows)
        return buffer.getvalue()

    def seed(self) -> int:
        if self.config.seed is None:
            raise UsageError(f"{self.args.command} is randomised and needs --seed")
        return self.config.seed

    def params(self) -> dict:
        params = set_caps(self.config.caps)
        if self.config.seed is not None:
            params['seed'] = self.config.seed
        return params


def flatten(payload: dict, prefix: str = '') -> Dict[str, str]:
    flat = {}
    for key, value in payload.items():
        name = f"{prefix}{key}"
        if isinstance(value, dict):
            flat.update(flatten(value, name + '.'))
        elif isinstance(value, (list, tuple)):
            flat[name] = json.dumps(value)
        else:
            flat[name] = '' if value is None else str(value)
    return flat


def report_rows(report: dict) -> List[Dict[str, str]]:
    """One row per counterexample or witness, or a single row for a claim with neither."""
    rows = []
    for kind in ('counterexamples', 'witnesses'):
        for item in report[kind]:
            rows.append({'claim_id': report['claim_id'], 'status': report['status'], 'kind': kind[:-1],
                         'key': item['key'], 'details': json.dumps(item['details'], sort_keys=True)})
    return rows or [{'claim_id': report['claim_id'], 'status': report['status'], 'kind': '', 'key': '',
                     'details': ''}]


# Subcommands

def run_indices(bench: Workbench) -> int:
    g = read_graph_file(bench.args.graph)
    check_order(g, 'invariants')
    names = [bench.args.index] if bench.args.index else list(INDEX_NAMES)
    result = {}
    for name in names:
        try:
            value = compute_index(g, name, kg_literal=bench.args.kg_literal, alpha=bench.args.alpha)
        except UndefinedIndexError as error:
            bench.log.warning(f"{name} is undefined: {error}")
            result[name] = {'value': '', 'kind': UNDEFINED, 'tolerance': 0, 'note': str(error)}
            continue
        result[name] = {'value': str(value.value), 'kind': value.kind, 'tolerance': value.tolerance,
                        'note': value.note}
    bench.emit(result)
    return EXIT_OK


def run_moments(bench: Workbench) -> int:
    g = read_graph_file(bench.args.graph)
    check_order(g, 'spectral')
    kmax = g.n if bench.args.kmax is None else bench.args.kmax
    moments = spectral_moments(g, kmax)
    estrada = compute_index(g, 'ee')
    bench.emit({'n': g.n, 'moments': [str(value) for value in moments.moments],
                'estrada': {'value': str(estrada.value), 'tolerance': estrada.tolerance}})
    return EXIT_OK


def run_sorder(bench: Workbench) -> int:
    left, right = read_graph_file(bench.args.first), read_graph_file(bench.args.second)
    check_order(left, 'spectral')
    check_order(right, 'spectral')
    relation = s_order_compare(left, right)
    bench.emit({'relation': relation.value,
                'first_difference': first_divergence(s_order_moments(left), s_order_moments(right))})
    return EXIT_OK


def _tree_class(args) -> TreeClass:
    if args.degseq:
        return TreeClass.by_degree_sequence(integers(args.degseq))
    if args.n is None or args.delta is None:
        raise UsageError("Give --n and --delta, or --degseq")
    return TreeClass.by_max_degree(args.n, args.delta)


def run_trees(bench: Workbench) -> int:
    args = bench.args
    if args.action == 'majorize':
        chain = majorization_chain(integers(args.lower), integers(args.upper))
        bench.emit({'chain': [list(sequence.degrees) for sequence in chain]})
        return EXIT_OK
    tree_class = _tree_class(args)
    if args.action == 'enumerate':
        trees = [to_graph6(tree) for tree in enumerate_trees(tree_class)]
        bench.emit({'class': tree_class.key, 'count': len(trees), 'trees': trees},
                   csv_rows=[{'class': tree_class.key, 'graph6': tree} for tree in trees])
        return EXIT_OK
    result = extremal_search(tree_class, args.index)
    bench.emit({'class': tree_class.key, 'index': args.index,
                'minimum': {'value': _value(result.min_value), 'trees': [to_graph6(t) for t in result.minimum]},
                'maximum': {'value': _value(result.max_value), 'trees': [to_graph6(t) for t in result.maximum]}})
    return EXIT_OK


def _value(value):
    return [str(item) for item in value] if isinstance(value, tuple) else str(value)


def _bipartite_graph(path: str):
    g = read_graph_file(path)
    check_order(g, 'bipartite')
    parts = bipartition(g)
    if parts is None:
        raise PreconditionError(f"{path} does not hold a bipartite graph")
    return g, parts


def run_bip(bench: Workbench) -> int:
    args = bench.args
    if args.action == 'bihole' and not args.graph:
        if args.n is None or args.delta is None:
            raise UsageError("bip bihole needs a graph file, or --n and --delta")
        bench.emit({'n': args.n, 'delta': args.delta, 'mode': args.mode,
                    'value': bihole_threshold(args.n, args.delta, args.mode),
                    'asymptotic_bound': asymptotic_bihole_bound(args.n, args.delta)})
        return EXIT_OK
    if not args.graph:
        raise UsageError(f"bip {args.action} needs a graph file")
    g, parts = _bipartite_graph(args.graph[0])

    if args.action == 'color':
        if args.k is None:
            bench.emit({'equitable_chromatic_number': equitable_chromatic_number(g)})
        else:
            coloring = equitable_color(g, args.k)
            bench.emit({'k': args.k, 'classes': None if coloring is None else [list(c) for c in coloring.classes]})
        return EXIT_OK
    if args.action == 'cycles':
        report = check_cycle_bounds(g, args.bound)
        bench.emit(report, csv_rows=report_rows(report.as_primitives()))
        return STATUS_EXIT[report.status]
    if args.action == 'bihole':
        hole = max_bihole(g, parts)
        bench.emit({'k': hole.k, 'part_a': list(hole.part_a), 'part_b': list(hole.part_b)})
        return EXIT_OK
    if args.action == 'unmixed':
        bench.emit({'unmixed': is_unmixed(g, parts)})
        return EXIT_OK
    if args.action == 'bpath':
        if args.u is None or args.v is None:
            raise UsageError("bip bpath needs --u and --v")
        path = path_through_all_b(g, args.u, args.v, parts)
        bench.emit({'u': args.u, 'v': args.v, 'path': path})
        return EXIT_OK
    # embed: the first file is the tree, the second the host
    if len(args.graph) != 2:
        raise UsageError("bip embed needs a tree file and a host graph file")
    host, host_parts = _bipartite_graph(args.graph[1])
    image = find_embedding(g, host, args.k or 1, tree_parts=parts, host_parts=host_parts)
    bench.emit({'k': args.k or 1, 'embedding': None if image is None else {str(v): w for v, w in image.items()}})
    return EXIT_OK


def run_cover(bench: Workbench) -> int:
    args = bench.args
    k = read_relation_file(args.relation)
    validate_caps(Caps({'max_p': k.p, 'max_q': k.q}), 'cover')
    if args.action == 'dim':
        value, pair = exterior_dimension(k)
        a, b = pair.as_lists()
        bench.emit({'dimension': value, 'cover': {'a': a, 'b': b}})
    elif args.action == 'meps':
        pairs = [dict(zip(('a', 'b'), pair.as_lists())) for pair in enumerate_meps(k)]
        bench.emit({'count': len(pairs), 'meps': pairs})
    elif args.action == 'decompose':
        decomposition = canonical_decomposition(k)
        bench.emit({
            'lower': dict(zip(('a', 'b'), decomposition.lower.as_lists())),
            'upper': dict(zip(('a', 'b'), decomposition.upper.as_lists())),
            'blocks': [{'s': list(_members(s)), 't': list(_members(t))} for s, t in decomposition.blocks],
            'regions': {str(region): edges for region, edges in decomposition.classify_edges().items()},
        })
    else:
        report = verify_covering(args.claim, k)
        bench.emit(report, csv_rows=report_rows(report.as_primitives()))
        return STATUS_EXIT[report.status]
    return EXIT_OK


def _members(mask: int) -> List[int]:
    return [i for i in range(mask.bit_length()) if mask >> i & 1]


def run_competition(bench: Workbench) -> int:
    args = bench.args
    if args.action == 'oracle':
        g = read_graph_file(args.target[0])
        check_order(g, 'competition')
        validate_caps(Caps({'kmax': args.kmax}), 'competition')
        bench.emit({'kappa': kappa_oracle(g, args.kmax), 'kmax': args.kmax})
        return EXIT_OK
    parts = integers(','.join(args.target))
    if args.action == 'kappa':
        if len(parts) != 3:
            raise UsageError("competition kappa takes n1 n2 n3")
        bench.write(f"{tripartite_kappa(*parts)}\n")
    elif args.action == 'cover':
        if len(parts) != 3:
            raise UsageError("competition cover takes n1 n2 n3")
        cover = tripartite_clique_cover(*parts)
        result = {'size': len(cover), 'valid': cover.is_valid(), 'cliques': [list(c) for c in cover.cliques]}
        if sum(parts) <= MODULE_LIMITS['competition']['max_n']:
            result['minimum'] = len(min_edge_clique_cover(cover.graph))
        bench.emit(result)
    else:
        bounds = multipartite_bounds(parts, r_admissible=not args.not_admissible)
        bench.emit({'parts': parts, 'lower': bounds.lower, 'upper': bounds.upper,
                    'formula': multipartite_kappa_formula(parts)})
    return EXIT_OK


def _chain_spec(args):
    if args.scores:
        if args.rows or args.cols:
            raise UsageError("Give either --scores or --rows with --cols")
        return ScoreSpec(tuple(integers(args.scores)))
    if not (args.rows and args.cols):
        raise UsageError("chain needs --rows and --cols, or --scores")
    return MarginSpec(tuple(integers(args.rows)), tuple(integers(args.cols)))


def run_chain(bench: Workbench) -> int:
    args = bench.args
    spec = _chain_spec(args)
    if args.action == 'sample':
        steps = args.steps if args.steps is not None else bench.config.caps.steps or 1000
        lines = ndjson(sample(spec, steps, bench.seed()))
        bench.write(''.join(line + '\n' for line in lines))
        return EXIT_OK
    if args.action == 'regular':
        if not args.scores:
            raise UsageError("chain regular needs --scores")
        bench.emit({'near_regular': near_regular(spec.scores, args.eps, args.constant), 'epsilon': args.eps,
                    'constant': args.constant})
        return EXIT_OK
    max_states = bench.config.caps.max_states or MODULE_LIMITS['chain']['max_states']
    validate_caps(Caps({'max_states': max_states}), 'chain')
    result = diagnostics(spec, args.eps, rational_states=bench.config.rational_states, max_states=max_states)
    bench.emit(result.report())
    return EXIT_OK


def run_verify(bench: Workbench) -> int:
    claim_ids = bench.config.claims
    if not claim_ids:
        raise UsageError("verify needs at least one --claim")
    if len(claim_ids) == 1:
        report = verify(claim_ids[0], bench.params(), bench.sweeper)
        bench.emit(report, csv_rows=report_rows(report.as_primitives()))
        return STATUS_EXIT[report.status]
    return _aggregate(bench, claim_ids)


def run_verify_all(bench: Workbench) -> int:
    return _aggregate(bench, bench.config.claims or None)


def _aggregate(bench: Workbench, claim_ids) -> int:
    aggregate = verify_all(bench.params(), bench.sweeper, claim_ids)
    rows = [row for report in aggregate.as_primitives()['reports'] for row in report_rows(report)]
    bench.emit(aggregate, csv_rows=rows)
    for summary in aggregate.summaries:
        bench.log.info(f"{summary.claim_id:32} {summary.status:10} {summary.anchor}")
    status = aggregate_status(aggregate)
    return STATUS_EXIT.get(status, EXIT_ERROR)


COMMANDS: Dict[str, Callable[[Workbench], int]] = {
    'indices': run_indices,
    'moments': run_moments,
    'sorder': run_sorder,
    'trees': run_trees,
    'bip': run_bip,
    'cover': run_cover,
    'competition': run_competition,
    'chain': run_chain,
    'verify': run_verify,
    'verify-all': run_verify_all,
}


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(prog='graphbench', description=__doc__,
                            formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument('--list', action='store_true', help="list every claim id with its anchor and exit")
    parser.add_argument('--config', help="YAML file whose keys mirror the long flags")
    parser.add_argument('--workers', type=int)
    parser.add_argument('--seed', type=int)
    parser.add_argument('--output', help="write the result atomically to this file")
    parser.add_argument('--format', choices=['json', 'csv'])
    commands = parser.add_subparsers(dest='command', parser_class=ArgumentParser)

    indices = commands.add_parser('indices')
    indices.add_argument('graph')
    which = indices.add_mutually_exclusive_group()
    which.add_argument('--all', action='store_true', help="every index (the default)")
    which.add_argument('--index', choices=list(INDEX_NAMES) + ['malpha'])
    indices.add_argument('--kg-literal', action='store_true')
    indices.add_argument('--alpha', type=float)

    moments = commands.add_parser('moments')
    moments.add_argument('graph')
    moments.add_argument('--kmax', type=int)

    sorder = commands.add_parser('sorder')
    sorder.add_argument('first')
    sorder.add_argument('second')

    trees = commands.add_parser('trees')
    trees.add_argument('action', choices=['enumerate', 'extremal', 'majorize'])
    trees.add_argument('--n', type=int)
    trees.add_argument('--delta', type=int)
    trees.add_argument('--degseq')
    trees.add_argument('--index', choices=EXTREMAL_INDICES, default='hm1')
    trees.add_argument('--lower', help="degree sequence at the bottom of a majorization chain")
    trees.add_argument('--upper', help="degree sequence at the top of a majorization chain")

    bip = commands.add_parser('bip')
    bip.add_argument('action', choices=['color', 'cycles', 'bihole', 'unmixed', 'embed', 'bpath'])
    bip.add_argument('graph', nargs='*')
    bip.add_argument('--k', type=int)
    bip.add_argument('--bound', choices=CYCLE_BOUNDS, default=CYCLE_BOUNDS[0])
    bip.add_argument('--u', type=int)
    bip.add_argument('--v', type=int)
    bip.add_argument('--n', type=int)
    bip.add_argument('--delta', type=int)
    bip.add_argument('--mode', choices=[ONE_SIDED, BOTH_SIDES], default=ONE_SIDED)

    cover = commands.add_parser('cover')
    cover.add_argument('action', choices=['dim', 'meps', 'decompose', 'verify'])
    cover.add_argument('relation')
    cover.add_argument('--claim', choices=sorted(COVERING_CHECKS), default='identity')

    competition = commands.add_parser('competition')
    competition.add_argument('action', choices=['kappa', 'cover', 'oracle', 'bounds'])
    competition.add_argument('target', nargs='+', help="part sizes, or a graph file for oracle")
    competition.add_argument('--kmax', type=int, default=MODULE_LIMITS['competition']['kmax'])
    competition.add_argument('--not-admissible', action='store_true',
                             help="r lies outside the range of the balanced cover result")

    chain = commands.add_parser('chain')
    chain.add_argument('action', choices=['sample', 'diag', 'regular'])
    chain.add_argument('--rows')
    chain.add_argument('--cols')
    chain.add_argument('--scores')
    chain.add_argument('--steps', type=int)
    chain.add_argument('--eps', type=float, default=0.01)
    chain.add_argument('--constant', type=float, default=1.0)

    for name in ('verify', 'verify-all'):
        command = commands.add_parser(name)
        command.add_argument('--claim', action='append', dest='claims', default=[])
        for cap in CAP_FLAGS:
            command.add_argument('--' + cap.replace('_', '-'), type=int, dest=cap)
    return parser


def config_overrides(args: argparse.Namespace) -> dict:
    overrides = {
        'subcommand': args.command,
        'workers': args.workers,
        'seed': args.seed,
        'output': args.output,
        'format': args.format,
        'claims': getattr(args, 'claims', None) or None,
    }
    if args.command in ('verify', 'verify-all'):
        overrides['caps'] = {cap: getattr(args, cap) for cap in CAP_FLAGS}
    return overrides


def list_text() -> str:
    return ''.join(f"{entry.claim_id}\t{entry.module}\t{entry.anchor}\n" for entry in list_claims())


def main(argv: Optional[List[str]] = None, stdout=None) -> int:
    log = logging.getLogger('graphbench.workbench')
    stdout = stdout or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        if args.list:
            stdout.write(list_text())
            return EXIT_OK
        if not args.command:
            raise UsageError("No subcommand given; see --help")
        config = load_config(args.config, config_overrides(args))
        with Workbench(args, config, stdout=stdout) as bench:
            bench.serve_forever()
        return bench.exit_code
    except GraphbenchError as error:
        log.error(str(error))
        sys.stderr.write(f"graphbench: {error}\n")
        return EXIT_ERROR


if __name__ == '__main__':
    sys.exit(main())
