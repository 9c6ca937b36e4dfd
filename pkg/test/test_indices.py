import math

import pytest

from graphbench_core.errors import DomainError, UndefinedIndexError
from graphbench_core.graph.graph import build_graph
from graphbench_core.invariants.indices import (EXACT, LOG_REAL, REAL, Ordering, compute_index, exp_index_compare,
                                                general_zagreb, hm_lower_bounds, hyper_zagreb, mkg_lower_bound,
                                                sombor_family)
from graphbench_core.trees.enumerate import all_trees

from .builders import complete_graph, path_graph, star_graph


def test_zagreb_family(named_graphs):
    p4 = named_graphs['P4']
    assert compute_index(p4, 'm1') == (EXACT, 6, 0, '')
    assert compute_index(p4, 'm2').value == 10
    assert compute_index(p4, 'f').value == 18
    assert compute_index(p4, 'malpha', alpha=0.5).kind == REAL
    assert compute_index(p4, 'malpha', alpha=0.5).value == pytest.approx(2 + 2 * math.sqrt(2))


def test_general_zagreb_domain():
    with pytest.raises(DomainError) as error:
        general_zagreb(build_graph(2, []), -1)
    assert error.value.vertex == 0
    assert general_zagreb(build_graph(2, []), 0.5).value == 0


def test_hyper_zagreb():
    assert [value.value for value in hyper_zagreb(path_graph(4))] == [34, 24]
    assert [value.value for value in hyper_zagreb(star_graph(3))] == [48, 27]
    # the star is the only tree with delta = n - 1
    assert hm_lower_bounds(4, 3) == (48, 27)


def test_sombor_family():
    k2 = complete_graph(2)
    assert sombor_family(k2, 'SO').value == pytest.approx(math.sqrt(2))
    assert sombor_family(k2, 'KG').value == pytest.approx(2.0)
    assert sombor_family(k2, 'KG', kg_literal=True).value == pytest.approx(math.sqrt(2))
    mkg = sombor_family(k2, 'MKG')
    assert mkg.kind == LOG_REAL
    assert mkg.value == pytest.approx(math.log(2))
    with pytest.raises(UndefinedIndexError):
        sombor_family(build_graph(3, []), 'MKG')


def test_mkg_lower_bound():
    assert mkg_lower_bound(6, 3) is None
    assert mkg_lower_bound(7, 3) is not None
    assert mkg_lower_bound(7, 1) is None


def test_exponential_comparison():
    assert exp_index_compare(path_graph(4), star_graph(3), 'HM1') == Ordering.LESS
    assert exp_index_compare(star_graph(3), path_graph(4), 'hm2') == Ordering.GREATER
    assert exp_index_compare(path_graph(4), path_graph(4), 'HM1') == Ordering.EQUAL
    with pytest.raises(ValueError):
        exp_index_compare(path_graph(4), path_graph(4), 'M1')


def test_unknown_index():
    with pytest.raises(ValueError):
        compute_index(path_graph(3), 'wiener')


def _exponents(g):
    return (sum((g.degree(u) + g.degree(v)) ** 2 for u, v in g.edges()),
            sum((g.degree(u) * g.degree(v)) ** 2 for u, v in g.edges()))


@pytest.mark.parametrize("n", range(2, 9))
def test_exponential_comparison_follows_the_exponents(n):
    trees = [(tree, _exponents(tree)) for tree in all_trees(n)]
    for first, first_exponents in trees:
        for second, second_exponents in trees:
            for position, base in enumerate(('HM1', 'HM2')):
                difference = first_exponents[position] - second_exponents[position]
                assert exp_index_compare(first, second, base) == (difference > 0) - (difference < 0)


@pytest.mark.parametrize("delta", range(1, 11))
def test_star_hyper_zagreb(delta):
    first, second = hyper_zagreb(star_graph(delta))
    assert (first.value, second.value) == (delta * (delta + 1) ** 2, delta ** 3)
    assert hm_lower_bounds(delta + 1, delta) == (first.value, second.value)
