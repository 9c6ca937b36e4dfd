import pytest

from graphbench_core.cover.claims import brute_force_dimension, verify_covering
from graphbench_core.cover.decomposition import ADMISSIBLE, EMPTY, INADMISSIBLE, canonical_decomposition
from graphbench_core.cover.meps import (enumerate_meps, exterior_dimension, inadmissible_edges, interior_dimension,
                                        max_disjoint_subgraph)
from graphbench_core.cover.relation import ExteriorPair, RelationGraph, parse_relation, read_relation_file, \
    to_matrix_text
from graphbench_core.errors import CapacityError, GraphValidationError
from graphbench_core.verification.report import VERIFIED


@pytest.fixture
def identity():
    return parse_relation('100\n010\n001')


def test_parse_relation(identity):
    assert (identity.p, identity.q) == (3, 3)
    assert identity.edges() == [(0, 0), (1, 1), (2, 2)]
    assert to_matrix_text(identity) == '100\n010\n001'
    assert parse_relation('{"p": 1, "q": 2, "edges": [[0, 1]]}') == RelationGraph(1, 2, [0b10])
    with pytest.raises(GraphValidationError):
        parse_relation('{"p": 1, "q": 2, "edges": [[0, 2]]}')
    with pytest.raises(GraphValidationError):
        parse_relation('{"p": 1}')
    with pytest.raises(GraphValidationError):
        parse_relation('10\n1')


def test_read_relation_file(tmp_path):
    path = tmp_path / 'k.txt'
    path.write_text('11\n01\n')
    assert read_relation_file(str(path)).edges() == [(0, 0), (0, 1), (1, 1)]
    with pytest.raises(GraphValidationError):
        read_relation_file(str(tmp_path / 'missing.txt'))


def test_exterior_dimension(identity):
    dimension, pair = exterior_dimension(identity)
    assert dimension == 3 == brute_force_dimension(identity)
    assert pair.weight == 3
    assert pair.covers(identity)
    assert len(max_disjoint_subgraph(identity)) == 3

    single = parse_relation('11')
    assert exterior_dimension(single)[0] == 1
    assert enumerate_meps(single) == [ExteriorPair(1, 0)]


def test_enumerate_meps(identity):
    meps = enumerate_meps(identity)
    assert len(meps) == 8
    assert all(pair.weight == 3 and pair.covers(identity) for pair in meps)

    full = parse_relation('11\n11')
    assert enumerate_meps(full) == [ExteriorPair(0, 0b11), ExteriorPair(0b11, 0)]

    tall = parse_relation('1\n1')
    assert enumerate_meps(tall) == [ExteriorPair(0, 1)]

    with pytest.raises(CapacityError):
        enumerate_meps(RelationGraph(13, 1, [1] * 13))


def test_interior_dimension(identity):
    assert interior_dimension(identity.complement()) == 3
    assert interior_dimension(parse_relation('00\n00')) == 0
    assert interior_dimension(parse_relation('11\n11')) == 4


def test_canonical_decomposition(identity):
    decomposition = canonical_decomposition(identity)
    assert decomposition.lower == ExteriorPair(0, 0b111)
    assert decomposition.upper == ExteriorPair(0b111, 0)
    assert sorted(decomposition.blocks) == [(0b001, 0b001), (0b010, 0b010), (0b100, 0b100)]
    assert len(decomposition.chain()) == 4
    assert decomposition.lattice() == enumerate_meps(identity)
    regions = decomposition.classify_edges()
    assert regions[ADMISSIBLE] == [(0, 0), (1, 1), (2, 2)]
    assert regions[INADMISSIBLE] == regions[EMPTY] == []
    assert inadmissible_edges(identity) == []

    single = canonical_decomposition(parse_relation('11'))
    assert single.lower == single.upper == ExteriorPair(1, 0)
    assert single.blocks == []

    full = canonical_decomposition(parse_relation('11\n11'))
    assert full.blocks == [(0b11, 0b11)]


def test_inadmissible_edges():
    # s0 sees both elements of T, s1 only t1
    k = parse_relation('11\n01')
    decomposition = canonical_decomposition(k)
    assert sorted(decomposition.classify_edges()[INADMISSIBLE]) == inadmissible_edges(k)
    assert decomposition.classify_edges()[EMPTY] == []


@pytest.mark.parametrize("which", ['identity', 'chain', 'blocks'])
def test_verify_covering(identity, which):
    report = verify_covering(which, identity)
    assert report.status == VERIFIED
    assert report.params['relation'] == identity.key()


def test_verify_covering_unknown(identity):
    with pytest.raises(ValueError):
        verify_covering('lattice', identity)
