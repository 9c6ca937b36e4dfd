from graphbench_core.trees.construct import alternating_greedy, spider, spiders
from graphbench_core.trees.enumerate import TreeClass, enumerate_trees
from graphbench_core.trees.extremal import extremal_search
from graphbench_core.trees.majorization import majorization_chain, majorizes

__all__ = ['TreeClass', 'alternating_greedy', 'enumerate_trees', 'extremal_search', 'majorization_chain',
           'majorizes', 'spider', 'spiders']
