"""
Exhaustive extremal search over a tree class.
"""
import logging
from collections import namedtuple
from typing import List

from graphbench_core.errors import PreconditionError
from graphbench_core.graph.canonical import canonical_code
from graphbench_core.graph.graph import Graph
from graphbench_core.invariants.indices import EXACT, compute_index
from graphbench_core.spectral.moments import s_order_extremes, s_order_moments
from graphbench_core.trees.enumerate import TreeClass, enumerate_trees

log = logging.getLogger('graphbench.trees')

EXTREMAL_INDICES = ('m1', 'm2', 'f', 'hm1', 'hm2', 'so', 'kg', 'mkg', 'ee', 'sorder')

ExtremalResult = namedtuple('ExtremalResult', ['minimum', 'maximum', 'min_value', 'max_value'])


def _by_code(graphs: List[Graph]) -> List[Graph]:
    return sorted(graphs, key=canonical_code)


def extremal_search(tree_class: TreeClass, index: str) -> ExtremalResult:
    """All trees of the class attaining the smallest and largest value of index.

    For 'sorder' the extremes are the first and last S-equal classes and the values are
    their moment vectors S_0..S_n.  Real valued indices are tied within their tolerance.
    """
    index = index.lower()
    if index not in EXTREMAL_INDICES:
        raise ValueError(f"Unknown index {index}, expected one of {EXTREMAL_INDICES}")
    trees = list(enumerate_trees(tree_class))
    if not trees:
        raise PreconditionError(f"The class {tree_class.key} contains no trees")
    log.debug(f"Extremal search for {index} over {len(trees)} trees of {tree_class.key}")

    if index == 'sorder':
        first, last = s_order_extremes(trees)
        return ExtremalResult(first, last, s_order_moments(first[0]).moments, s_order_moments(last[0]).moments)

    values = [(compute_index(tree, index), tree) for tree in trees]
    low = min(value.value for value, _ in values)
    high = max(value.value for value, _ in values)
    kind = values[0][0].kind
    tolerance = 0 if kind == EXACT else values[0][0].tolerance * max(1.0, abs(low), abs(high))

    minimum = [tree for value, tree in values if value.value - low <= tolerance]
    maximum = [tree for value, tree in values if high - value.value <= tolerance]
    return ExtremalResult(_by_code(minimum), _by_code(maximum), low, high)
