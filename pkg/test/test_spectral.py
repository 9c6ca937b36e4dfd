import math

import numpy as np
import pytest

from graphbench_core.errors import PreconditionError
from graphbench_core.graph.enumerate import enumerate_graphs
from graphbench_core.graph.graph import degree_sequence
from graphbench_core.spectral.moments import (SOrder, closed_walks, count_p4, count_triangles, estrada,
                                              first_divergence, first_in_s_order, last_in_s_order, s_order_compare,
                                              s_order_moments, spectral_moments)
from graphbench_core.trees.enumerate import all_trees

from .builders import complete_graph, path_graph, star_graph


def test_moments_count_closed_walks():
    moments = spectral_moments(path_graph(4), 4)
    assert moments.moments == (4, 0, 6, 0, 14)
    assert spectral_moments(complete_graph(3), 3).moments == (3, 0, 6, 6)
    assert spectral_moments(path_graph(4), 0).moments == (4,)
    with pytest.raises(PreconditionError):
        spectral_moments(path_graph(4), 9)
    with pytest.raises(PreconditionError):
        spectral_moments(path_graph(4), -1)


def test_s_order():
    p4, star = path_graph(4), star_graph(3)
    assert s_order_compare(p4, star) == SOrder.PRECEDES
    assert s_order_compare(star, p4) == SOrder.SUCCEEDS
    assert s_order_compare(p4, p4.relabel([3, 2, 1, 0])) == SOrder.EQUAL_S
    assert first_divergence(s_order_moments(p4), s_order_moments(star)) == 4
    assert first_in_s_order([star, p4]) == p4
    assert last_in_s_order([star, p4]) == star
    with pytest.raises(PreconditionError):
        s_order_compare(p4, path_graph(5))


def test_estrada():
    assert estrada(complete_graph(2)).value == pytest.approx(math.e + 1 / math.e, abs=1e-8)
    assert estrada(complete_graph(3)).value == pytest.approx(math.exp(2) + 2 / math.e, abs=1e-8)


def test_subgraph_counts():
    assert count_triangles(complete_graph(4)) == 4
    assert count_p4(path_graph(4)) == 1
    assert count_p4(complete_graph(4)) == 12


def test_moments_are_eigenvalue_power_sums():
    graphs = [g for n in range(1, 8) for g in enumerate_graphs(n)]
    graphs.extend(tree for n in range(8, 11) for tree in all_trees(n))
    for g in graphs:
        eigenvalues = np.linalg.eigvalsh(g.adjacency_matrix())
        for k, count in enumerate(closed_walks(g, 8)):
            assert float(np.sum(eigenvalues ** k)) == pytest.approx(count, rel=1e-9, abs=1e-6)


@pytest.mark.parametrize("n", range(4, 11))
def test_sixth_moment_counts_paths(n):
    groups = {}
    for tree in all_trees(n):
        groups.setdefault(degree_sequence(tree), []).append(tree)
    for trees in groups.values():
        reference = trees[0]
        reference_walks, reference_p4 = closed_walks(reference, 6), count_p4(reference)
        for tree in trees[1:]:
            walks = closed_walks(tree, 6)
            assert walks[:6] == reference_walks[:6]
            assert walks[6] - reference_walks[6] == 6 * (count_p4(tree) - reference_p4)
