import pytest

from graphbench_core.competition.claims import key, multipartite_instances, partitions
from graphbench_core.competition.cover import (complete_multipartite, maximal_cliques, min_edge_clique_cover,
                                               min_set_cover, neighbourhood_lower_bound, tripartite_clique_cover,
                                               vertex_clique_cover_number)
from graphbench_core.competition.kappa import (balanced_lower_bounds, multipartite_bounds,
                                               multipartite_kappa_formula, tripartite_kappa)
from graphbench_core.competition.oracle import kappa_oracle
from graphbench_core.errors import CapacityError, PreconditionError

from .builders import complete_graph, cycle_graph, path_graph


@pytest.mark.parametrize("parts, expected", [
    ((1, 1, 1), 1),
    ((2, 1, 1), 1),
    ((2, 2, 2), 2),
    ((3, 2, 1), 3),
    ((3, 3, 1), 4),
    ((4, 2, 2), 4),
])
def test_tripartite_kappa(parts, expected):
    assert tripartite_kappa(*parts) == expected


def test_tripartite_kappa_needs_sorted_parts():
    with pytest.raises(PreconditionError):
        tripartite_kappa(1, 2, 3)
    with pytest.raises(PreconditionError):
        tripartite_kappa(2, 2, 0)


def test_complete_multipartite():
    g = complete_multipartite((2, 1))
    assert g.edges() == [(0, 2), (1, 2)]
    assert complete_multipartite((2, 2, 2)).m == 12


def test_tripartite_clique_cover():
    cover = tripartite_clique_cover(2, 2, 2)
    assert len(cover) == 4
    assert cover.is_valid()
    assert len(min_edge_clique_cover(cover.graph)) == 4

    uneven = tripartite_clique_cover(3, 2, 2)
    assert len(uneven) == 6
    assert uneven.is_valid()


def test_clique_covers():
    assert maximal_cliques(cycle_graph(4)) == sorted([0b0011, 0b0110, 0b1100, 0b1001])
    assert len(min_edge_clique_cover(complete_graph(4))) == 1
    assert len(min_edge_clique_cover(path_graph(4))) == 3
    assert vertex_clique_cover_number(cycle_graph(4)) == 2
    assert vertex_clique_cover_number(complete_graph(3)) == 1
    assert neighbourhood_lower_bound(complete_graph(3)) == 1
    assert min_set_cover(0, [1, 2]) == []
    assert min_set_cover(0b111, [0b011, 0b100, 0b110]) in ([0, 1], [0, 2])
    assert min_set_cover(0b111, [0b001, 0b010, 0b100], limit=2) is None
    with pytest.raises(CapacityError):
        min_edge_clique_cover(complete_graph(8))


def test_kappa_oracle():
    assert kappa_oracle(complete_graph(3), 4) == 1
    assert kappa_oracle(cycle_graph(4), 4) == 2
    assert kappa_oracle(path_graph(4), 4) == 1
    assert kappa_oracle(complete_multipartite((2, 2, 2)), 4) == tripartite_kappa(2, 2, 2)
    assert kappa_oracle(cycle_graph(4), 1) is None
    with pytest.raises(CapacityError):
        kappa_oracle(complete_graph(7), 2)
    with pytest.raises(CapacityError):
        kappa_oracle(complete_graph(3), 5)


def test_multipartite_bounds():
    assert multipartite_bounds((2, 2, 2)) == (2, None)
    assert multipartite_bounds((3, 3, 3)) == (4, 5)
    assert multipartite_bounds((3, 3, 3), r_admissible=False) == (4, None)
    assert multipartite_bounds((5, 1)) == (1, None)
    with pytest.raises(PreconditionError):
        multipartite_bounds((3,))
    assert balanced_lower_bounds(3, 3) == [4, 4]
    assert balanced_lower_bounds(3, 2) == [1]
    assert multipartite_kappa_formula((2, 2, 2)) is None


def test_instances():
    assert partitions(4, 2) == [(3, 1), (2, 2)]
    assert (2, 2, 2) in multipartite_instances(6, min_parts=3, max_parts=3)
    assert all(len(parts) == 3 for parts in multipartite_instances(6, min_parts=3, max_parts=3))
    assert key((2, 2, 2)) == 'K2,2,2'
