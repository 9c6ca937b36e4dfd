from graphbench_core.graph.graph import (Bipartition, DegreeSequence, Graph, bipartition, bits, build_graph,
                                        degree_sequence, is_connected, is_graphical, is_k_connected, is_spider,
                                        is_tree, vertex_connectivity)
from graphbench_core.graph.canonical import canonical_code

__all__ = ['Bipartition', 'DegreeSequence', 'Graph', 'bipartition', 'bits', 'build_graph', 'canonical_code',
           'degree_sequence', 'is_connected', 'is_graphical', 'is_k_connected', 'is_spider', 'is_tree',
           'vertex_connectivity']
