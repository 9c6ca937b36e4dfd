from graphbench_core.bipartite.bihole import BiHole, bihole_threshold, max_bihole
from graphbench_core.bipartite.coloring import (EquitableColoring, equitable_chromatic_number, equitable_color,
                                                knn_condition)
from graphbench_core.bipartite.cycles import check_cycle_bounds, longest_cycle
from graphbench_core.bipartite.embedding import find_embedding
from graphbench_core.bipartite.paths import path_through_all_b
from graphbench_core.bipartite.unmixed import is_unmixed, minimal_vertex_covers

__all__ = ['BiHole', 'EquitableColoring', 'bihole_threshold', 'check_cycle_bounds', 'equitable_chromatic_number',
           'equitable_color', 'find_embedding', 'is_unmixed', 'knn_condition', 'longest_cycle', 'max_bihole',
           'minimal_vertex_covers', 'path_through_all_b']
