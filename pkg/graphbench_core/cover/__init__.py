from graphbench_core.cover.decomposition import CanonicalDecomposition, canonical_decomposition
from graphbench_core.cover.meps import (enumerate_meps, exterior_dimension, inadmissible_edges, interior_dimension,
                                        max_disjoint_subgraph)
from graphbench_core.cover.relation import ExteriorPair, RelationGraph, parse_relation, random_relation

__all__ = ['CanonicalDecomposition', 'ExteriorPair', 'RelationGraph', 'canonical_decomposition', 'enumerate_meps',
           'exterior_dimension', 'inadmissible_edges', 'interior_dimension', 'max_disjoint_subgraph',
           'parse_relation', 'random_relation']
