import pytest

from graphbench_core.errors import CapacityError, PreconditionError
from graphbench_core.graph.graph import DegreeSequence, degree_sequence, is_spider, is_tree
from graphbench_core.invariants.indices import hm_lower_bounds, hyper_zagreb
from graphbench_core.trees.construct import alternating_greedy, end_support_vertices, spider, spiders, \
    support_vertices
from graphbench_core.trees.enumerate import TreeClass, all_trees, enumerate_trees, tree_degree_sequences
from graphbench_core.trees.extremal import extremal_search
from graphbench_core.trees.majorization import majorization_chain, majorizes

from .builders import path_graph, star_graph


@pytest.mark.parametrize("n, count", [(1, 1), (4, 2), (5, 3), (6, 6), (7, 11), (8, 23), (9, 47), (10, 106)])
def test_all_trees(n, count):
    trees = all_trees(n)
    assert len(trees) == count
    assert all(is_tree(tree) for tree in trees)


@pytest.mark.parametrize("n, delta, count", [(6, 3, 3), (7, 3, 5), (7, 4, 3), (7, 6, 1)])
def test_tree_class_by_max_degree(n, delta, count):
    trees = list(enumerate_trees(TreeClass.by_max_degree(n, delta)))
    assert len(trees) == count
    assert all(tree.max_degree == delta for tree in trees)


def test_tree_class_by_degree_sequence():
    tree_class = TreeClass.by_degree_sequence((3, 2, 1, 1, 1))
    assert tree_class.key == 'degrees=3,2,1,1,1'
    trees = list(enumerate_trees(tree_class))
    assert len(trees) == 1
    assert is_spider(trees[0]) == (2, 1, 1)

    with pytest.raises(PreconditionError):
        TreeClass.by_degree_sequence((2, 2, 2))
    with pytest.raises(PreconditionError):
        TreeClass.by_max_degree(5, 5)
    with pytest.raises(CapacityError):
        TreeClass.by_max_degree(17, 3)


def test_tree_degree_sequences():
    sequences = tree_degree_sequences(5)
    assert DegreeSequence((4, 1, 1, 1, 1)) in sequences
    assert DegreeSequence((2, 2, 2, 1, 1)) in sequences
    assert len(sequences) == 3


def test_spiders():
    built = spider(7, 3, (4, 1, 1))
    assert is_spider(built) == (4, 1, 1)
    assert [is_spider(s) for s in spiders(5, 3)] == [(2, 1, 1)]
    with pytest.raises(PreconditionError):
        spider(7, 3, (3, 1, 1))


def test_alternating_greedy():
    tree = alternating_greedy((3, 3))
    assert tree.n == 6
    assert degree_sequence(tree) == DegreeSequence((3, 3, 1, 1, 1, 1))
    with pytest.raises(PreconditionError):
        alternating_greedy((3, 1))


def test_support_vertices():
    assert support_vertices(path_graph(4)) == [1, 2]
    assert end_support_vertices(path_graph(4)) == [1, 2]
    assert support_vertices(star_graph(3)) == [0]


def test_extremal_hyper_zagreb():
    result = extremal_search(TreeClass.by_max_degree(7, 3), 'hm1')
    assert result.min_value == hm_lower_bounds(7, 3)[0] == 98
    assert [is_spider(tree) for tree in result.minimum] == [(4, 1, 1)]

    single = extremal_search(TreeClass.by_max_degree(5, 3), 'hm1')
    assert single.min_value == single.max_value == 66
    assert single.minimum == single.maximum


def test_extremal_s_order():
    result = extremal_search(TreeClass.by_max_degree(4, 3), 'sorder')
    assert result.min_value == (4, 0, 6, 0, 18)
    with pytest.raises(ValueError):
        extremal_search(TreeClass.by_max_degree(4, 3), 'wiener')


def test_majorization_chain():
    assert majorizes((3, 1, 1, 1), (2, 2, 1, 1))
    assert not majorizes((2, 2, 1, 1), (3, 1, 1, 1))
    chain = majorization_chain((2, 2, 1, 1), (3, 1, 1, 1))
    assert [sequence.degrees for sequence in chain] == [(2, 2, 1, 1), (3, 1, 1, 1)]

    long_chain = majorization_chain((2, 2, 2, 1, 1), (4, 1, 1, 1, 1))
    assert long_chain[0].degrees == (2, 2, 2, 1, 1)
    assert long_chain[-1].degrees == (4, 1, 1, 1, 1)
    for lower, upper in zip(long_chain, long_chain[1:]):
        assert sum(abs(a - b) for a, b in zip(lower, upper)) == 2

    with pytest.raises(PreconditionError):
        majorization_chain((3, 1, 1, 1), (2, 2, 1, 1))
    with pytest.raises(PreconditionError):
        majorization_chain((2, 2, 1, 1), (2, 2, 1, 1))


@pytest.mark.parametrize("n", range(4, 9))
def test_hyper_zagreb_bound_is_the_class_minimum(n):
    for delta in range(3, n):
        values = [hyper_zagreb(tree) for tree in enumerate_trees(TreeClass.by_max_degree(n, delta))]
        assert (min(first.value for first, _ in values), min(second.value for _, second in values)) == \
            hm_lower_bounds(n, delta)
