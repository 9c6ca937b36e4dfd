from graphbench_core.competition.cover import (CliqueCover, complete_multipartite, min_edge_clique_cover,
                                               neighbourhood_lower_bound, tripartite_clique_cover)
from graphbench_core.competition.kappa import (Bounds, balanced_lower_bounds, multipartite_bounds,
                                               multipartite_kappa_formula, tripartite_kappa)
from graphbench_core.competition.oracle import kappa_oracle

__all__ = ['Bounds', 'CliqueCover', 'balanced_lower_bounds', 'complete_multipartite', 'kappa_oracle',
           'min_edge_clique_cover', 'multipartite_bounds', 'multipartite_kappa_formula', 'neighbourhood_lower_bound',
           'tripartite_clique_cover', 'tripartite_kappa']
