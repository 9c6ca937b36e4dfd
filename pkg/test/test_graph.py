import json
from itertools import combinations, permutations

import networkx as nx
import numpy as np
import pytest

from graphbench_core.errors import CapacityError, GraphValidationError, PreconditionError
from graphbench_core.graph.canonical import canonical_code, graph_code, tree_code
from graphbench_core.graph.codec import (format_graph, from_graph6, from_matrix, parse_graph, read_graph_file,
                                         to_graph6, to_json, to_networkx, write_graph)
from graphbench_core.graph.enumerate import enumerate_graphs
from graphbench_core.graph.graph import (DegreeSequence, bipartition, build_graph, degree_sequence, is_connected,
                                         is_graphical, is_spider, is_tree, vertex_connectivity)

from .builders import complete_graph, cycle_graph, path_graph, star_graph


def test_build_graph_rejects_bad_edges():
    with pytest.raises(GraphValidationError):
        build_graph(3, [(0, 0)])
    with pytest.raises(GraphValidationError):
        build_graph(3, [(0, 3)])
    with pytest.raises(GraphValidationError):
        build_graph(0, [])
    with pytest.raises(CapacityError):
        build_graph(65, [])


def test_basic_properties(named_graphs):
    p4 = named_graphs['P4']
    assert p4.m == 3
    assert p4.edges() == [(0, 1), (1, 2), (2, 3)]
    assert p4.leaves() == [0, 3]
    assert degree_sequence(p4) == DegreeSequence((2, 2, 1, 1))
    assert is_tree(p4)
    assert not is_tree(named_graphs['C4'])
    assert is_connected(named_graphs['C5'])
    assert not is_connected(build_graph(3, [(0, 1)]))
    assert named_graphs['K4'].complement().m == 0


def test_degree_sequences():
    assert is_graphical([3, 3, 3, 3])
    assert not is_graphical([3, 3, 1, 1])
    assert not is_graphical([1, 1, 1])
    assert DegreeSequence((2, 1, 1)).is_tree_realizable
    assert not DegreeSequence((2, 2, 2)).is_tree_realizable
    with pytest.raises(PreconditionError):
        DegreeSequence((1, 2))


def test_bipartition(named_graphs):
    parts = bipartition(named_graphs['C4'])
    assert parts.part_a == (0, 2)
    assert parts.part_b == (1, 3)
    assert bipartition(named_graphs['C5']) is None
    assert bipartition(named_graphs['K3']) is None


def test_vertex_connectivity(named_graphs):
    assert vertex_connectivity(named_graphs['K4']) == 3
    assert vertex_connectivity(named_graphs['C5']) == 2
    assert vertex_connectivity(named_graphs['P4']) == 1
    assert vertex_connectivity(build_graph(3, [(0, 1)])) == 0


def test_spider_legs():
    assert is_spider(star_graph(3)) == (1, 1, 1)
    spider = build_graph(6, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5)])
    assert is_spider(spider) == (2, 2, 1)
    assert is_spider(path_graph(5)) is None


def test_canonical_codes_ignore_labels():
    p4 = path_graph(4)
    relabelled = p4.relabel([2, 0, 3, 1])
    assert canonical_code(p4) == canonical_code(relabelled)
    assert canonical_code(p4) != canonical_code(star_graph(3))
    assert canonical_code(p4) == tree_code(p4)

    c5 = cycle_graph(5)
    assert graph_code(c5) == graph_code(c5.relabel([1, 3, 0, 4, 2]))
    assert graph_code(c5) != graph_code(build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 2)]))


def test_enumerate_graphs():
    assert len(enumerate_graphs(3)) == 4
    assert len(enumerate_graphs(4)) == 11
    assert len(enumerate_graphs(4, connected=True)) == 6
    with pytest.raises(CapacityError):
        enumerate_graphs(9)


def _labelled_graphs(n):
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield build_graph(n, [pair for index, pair in enumerate(pairs) if mask >> index & 1])


def _smallest_relabelling(g):
    """Lexicographically least edge list over every vertex permutation."""
    return min(tuple(sorted((min(p[u], p[v]), max(p[u], p[v])) for u, v in g.edges()))
               for p in permutations(range(g.n)))


@pytest.mark.parametrize("n, classes", [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34)])
def test_canonical_code_decides_isomorphism(n, classes):
    code_of_form, form_of_code = {}, {}
    for g in _labelled_graphs(n):
        code, form = canonical_code(g), _smallest_relabelling(g)
        assert code_of_form.setdefault(form, code) == code
        assert form_of_code.setdefault(code, form) == form
    assert len(code_of_form) == classes


def test_enumeration_counts():
    assert [len(enumerate_graphs(n)) for n in range(1, 8)] == [1, 2, 4, 11, 34, 156, 1044]
    assert [len(enumerate_graphs(n, connected=True)) for n in range(1, 8)] == [1, 1, 2, 6, 21, 112, 853]
    assert len({_smallest_relabelling(g) for g in enumerate_graphs(6)}) == 156


def test_codes_survive_relabelling():
    rng = np.random.default_rng(7)
    for g in enumerate_graphs(7):
        permutation = [int(v) for v in rng.permutation(7)]
        assert canonical_code(g.relabel(permutation)) == canonical_code(g)


def test_graph6():
    assert to_graph6(complete_graph(3)) == 'Bw'
    assert from_graph6('Bw') == complete_graph(3)
    assert parse_graph('>>graph6<<Bw\n') == complete_graph(3)
    with pytest.raises(GraphValidationError):
        from_graph6('\x01')


def test_matrix_and_json():
    assert from_matrix('010\n101\n010') == path_graph(3)
    with pytest.raises(GraphValidationError):
        from_matrix('01\n00')
    with pytest.raises(GraphValidationError):
        from_matrix('010\n101')
    assert parse_graph('{"n": 3, "edges": [[0, 1], [1, 2]]}') == path_graph(3)
    with pytest.raises(GraphValidationError):
        parse_graph('{"n": 3}')
    assert to_json(path_graph(3)) == {'n': 3, 'edges': [[0, 1], [1, 2]]}
    with pytest.raises(GraphValidationError):
        format_graph(path_graph(3), 'dot')


def test_write_graph(tmp_path):
    target = tmp_path / 'p4.json'
    write_graph(path_graph(4), str(target))
    assert json.loads(target.read_text()) == {'n': 4, 'edges': [[0, 1], [1, 2], [2, 3]]}
    assert read_graph_file(str(target)) == path_graph(4)

    matrix = tmp_path / 'k3.txt'
    write_graph(complete_graph(3), str(matrix))
    assert matrix.read_text() == '011\n101\n110\n'

    g6 = tmp_path / 'k3.g6'
    write_graph(complete_graph(3), str(g6))
    assert g6.read_text() == 'Bw\n'
    assert [path.name for path in tmp_path.iterdir() if path.name.startswith('.graphbench')] == []


def test_read_missing_file(tmp_path):
    with pytest.raises(GraphValidationError):
        read_graph_file(str(tmp_path / 'missing.g6'))


def test_vertex_connectivity_against_networkx():
    for g in enumerate_graphs(5):
        assert vertex_connectivity(g) == nx.node_connectivity(to_networkx(g))
