"""
Exhaustive enumeration of unlabelled trees.

A free tree is generated exactly once from its centroid: either a single centroid whose
branches all have fewer than n/2 vertices, or an edge joining two rooted halves of n/2
vertices.  Rooted trees are nested, sorted tuples of their children, built from integer
partitions of the vertex count.
"""
import functools
from collections import Counter
from itertools import combinations_with_replacement, product
from typing import Iterator, List, Optional, Sequence, Tuple

from graphbench_core.errors import CapacityError, PreconditionError
from graphbench_core.graph.graph import DegreeSequence, Graph, build_graph, degree_sequence

MAX_CLASS_VERTICES = 16
MAX_DEGREE_SEQUENCE_VERTICES = 18

RootedTree = Tuple['RootedTree', ...]


@functools.lru_cache(maxsize=None)
def partitions(total: int, largest: int, parts: int) -> Tuple[Tuple[int, ...], ...]:
    """Partitions of total into at most `parts` parts, none above `largest`, largest part first."""
    if total == 0:
        return ((),)
    if parts == 0 or largest == 0:
        return ()
    found = []
    for first in range(min(total, largest), 0, -1):
        for rest in partitions(total - first, first, parts - 1):
            found.append((first,) + rest)
    return tuple(found)


def _forests(total: int, largest: int, count: int, max_children: int) -> Iterator[RootedTree]:
    """Multisets of rooted subtrees with the given sizes, as sorted tuples."""
    for partition in partitions(total, largest, count):
        selections = [combinations_with_replacement(rooted_trees(size, max_children), repeat)
                      for size, repeat in sorted(Counter(partition).items())]
        for combination in product(*selections):
            yield tuple(sorted(tree for group in combination for tree in group))


@functools.lru_cache(maxsize=None)
def rooted_trees(size: int, max_children: int) -> Tuple[RootedTree, ...]:
    """Rooted trees on `size` vertices in which no vertex has more than max_children children."""
    if size == 1:
        return ((),)
    if max_children == 0:
        return ()
    return tuple(sorted(set(_forests(size - 1, size - 1, max_children, max_children))))


def rooted_to_edges(tree: RootedTree, first: int = 0) -> Tuple[int, List[Tuple[int, int]]]:
    """Label a rooted tree in preorder from `first`; returns (vertex count, edges)."""
    edges = []
    stack = [(tree, first)]
    next_label = first + 1
    while stack:
        node, label = stack.pop()
        for child in node:
            edges.append((label, next_label))
            stack.append((child, next_label))
            next_label += 1
    return next_label - first, edges


def free_trees(n: int, max_degree: Optional[int] = None) -> Iterator[Graph]:
    """Every tree on n vertices with no degree above max_degree, one per isomorphism class."""
    if n == 1:
        yield build_graph(1, [])
        return
    delta = n - 1 if max_degree is None else max_degree
    if delta < 1:
        return

    # Single centroid: the root may have delta children, other vertices delta-1.
    for children in _forests(n - 1, (n - 1) // 2, delta, delta - 1):
        _, edges = rooted_to_edges(children)
        yield build_graph(n, edges)

    # Central edge between two halves of n/2 vertices each.
    if n % 2 == 0:
        halves = rooted_trees(n // 2, delta - 1)
        for left, right in combinations_with_replacement(halves, 2):
            size, edges = rooted_to_edges(left)
            _, right_edges = rooted_to_edges(right, size)
            yield build_graph(n, edges + right_edges + [(0, size)])


class TreeClass:
    """Either all trees with n vertices and maximum degree exactly delta, or all realisations of a degree sequence."""

    def __init__(self, n: int, delta: Optional[int] = None, degrees: Optional[DegreeSequence] = None):
        self.n = n
        self.delta = delta
        self.degrees = degrees

    @classmethod
    def by_max_degree(cls, n: int, delta: int) -> 'TreeClass':
        if n > MAX_CLASS_VERTICES:
            raise CapacityError(f"Tree classes by maximum degree are limited to {MAX_CLASS_VERTICES} vertices",
                                module='trees', limit=MAX_CLASS_VERTICES)
        if not 1 <= delta <= n - 1:
            raise PreconditionError(f"Maximum degree must lie in 1..{n - 1}, got {delta}")
        return cls(n, delta=delta)

    @classmethod
    def by_degree_sequence(cls, degrees: Sequence[int]) -> 'TreeClass':
        if not isinstance(degrees, DegreeSequence):
            degrees = DegreeSequence(degrees)
        if len(degrees) > MAX_DEGREE_SEQUENCE_VERTICES:
            raise CapacityError(f"Tree classes by degree sequence are limited to {MAX_DEGREE_SEQUENCE_VERTICES} "
                                f"vertices", module='trees', limit=MAX_DEGREE_SEQUENCE_VERTICES)
        if not degrees.is_tree_realizable:
            raise PreconditionError(f"{degrees} is not the degree sequence of a tree")
        return cls(len(degrees), delta=degrees[0], degrees=degrees)

    @property
    def key(self) -> str:
        if self.degrees is not None:
            return 'degrees=' + ','.join(str(d) for d in self.degrees)
        return f"n={self.n},delta={self.delta}"

    def __repr__(self):
        return f"TreeClass({self.key})"


def enumerate_trees(tree_class: TreeClass) -> Iterator[Graph]:
    for tree in free_trees(tree_class.n, tree_class.delta):
        if tree_class.degrees is not None:
            if degree_sequence(tree) == tree_class.degrees:
                yield tree
        elif tree.max_degree == tree_class.delta:
            yield tree


def all_trees(n: int) -> List[Graph]:
    if n > MAX_DEGREE_SEQUENCE_VERTICES:
        raise CapacityError(f"Tree enumeration is limited to {MAX_DEGREE_SEQUENCE_VERTICES} vertices",
                            module='trees', limit=MAX_DEGREE_SEQUENCE_VERTICES)
    return list(free_trees(n))


def tree_degree_sequences(n: int) -> List[DegreeSequence]:
    """Every tree-realizable degree sequence of length n, in decreasing lexicographic order."""
    if n == 1:
        return [DegreeSequence((0,))]
    found = []
    for internal in partitions(n - 2, n - 2, n):
        degrees = [part + 1 for part in internal] + [1] * (n - len(internal))
        found.append(DegreeSequence(degrees))
    return found
