"""
Explicit tree constructions: spiders, alternating greedy trees and the local leaf move.
"""
from typing import Iterator, List, Sequence, Tuple

from graphbench_core.errors import PreconditionError
from graphbench_core.graph.graph import DegreeSequence, Graph, build_graph
from graphbench_core.trees.enumerate import partitions


def spider(n: int, delta: int, legs: Sequence[int]) -> Graph:
    """A centre (vertex 0) of degree delta with pendant paths of the given lengths."""
    legs = list(legs)
    if len(legs) != delta:
        raise PreconditionError(f"A spider with {delta} legs needs {delta} leg lengths, got {legs}")
    if any(length < 1 for length in legs):
        raise PreconditionError(f"Leg lengths must be positive: {legs}")
    if sum(legs) != n - 1:
        raise PreconditionError(f"Leg lengths {legs} sum to {sum(legs)}, a spider on {n} vertices needs {n - 1}")

    edges = []
    label = 1
    for length in legs:
        previous = 0
        for _ in range(length):
            edges.append((previous, label))
            previous = label
            label += 1
    return build_graph(n, edges)


def spiders(n: int, delta: int) -> List[Graph]:
    """Every spider on n vertices with delta legs, longest legs first in lexicographic order."""
    return [spider(n, delta, legs) for legs in partitions(n - 1, n - 1, delta) if len(legs) == delta]


class _TreeBuilder:
    def __init__(self):
        self.size = 0
        self.edges: List[Tuple[int, int]] = []

    def vertex(self) -> int:
        self.size += 1
        return self.size - 1

    def hang(self, parent: int, degree: int):
        """A child of parent with degree-1 leaves of its own."""
        child = self.vertex()
        self.edges.append((parent, child))
        for _ in range(degree - 1):
            self.edges.append((child, self.vertex()))


def alternating_greedy(internal_degrees: Sequence[int]) -> Graph:
    """The alternating greedy tree for a non-increasing sequence of internal (non-leaf) degrees.

    When m-1 <= d_m the root has the other m-1 internal vertices as children plus leaves.
    Otherwise the root gets d_m - 1 children of degrees d_1.., the tree for the remaining
    degrees is built recursively, and the root replaces the first leaf of that tree whose
    neighbour has the smallest degree.
    """
    degrees = tuple(internal_degrees)
    if not degrees:
        raise PreconditionError("The alternating greedy tree needs at least one internal degree")
    DegreeSequence(degrees)
    if degrees[-1] < 2:
        raise PreconditionError(f"Internal degrees must be at least 2: {degrees}")

    n, edges = _alternating(degrees)
    return build_graph(n, edges)


def _alternating(degrees: Tuple[int, ...]) -> Tuple[int, List[Tuple[int, int]]]:
    m = len(degrees)
    last = degrees[-1]
    builder = _TreeBuilder()
    if m - 1 <= last:
        root = builder.vertex()
        for degree in degrees[:-1]:
            builder.hang(root, degree)
        for _ in range(last - m + 1):
            builder.edges.append((root, builder.vertex()))
        return builder.size, builder.edges

    rest_size, rest_edges = _alternating(degrees[last - 1:m - 1])
    rest = build_graph(rest_size, rest_edges)
    leaves = rest.leaves()
    smallest = min(rest.degree(rest.neighbours(v)[0]) for v in leaves)
    join = next(v for v in leaves if rest.degree(rest.neighbours(v)[0]) == smallest)

    builder.size = rest_size
    builder.edges = list(rest_edges)
    for degree in degrees[:last - 1]:
        builder.hang(join, degree)
    return builder.size, builder.edges


def support_vertices(tree: Graph) -> List[int]:
    return sorted({w for v in tree.leaves() for w in tree.neighbours(v)})


def end_support_vertices(tree: Graph) -> List[int]:
    """Support vertices with at most one neighbour that is not a leaf."""
    found = []
    for v in support_vertices(tree):
        if sum(1 for w in tree.neighbours(v) if tree.degree(w) > 1) <= 1:
            found.append(v)
    return found


def leaf_moves(tree: Graph, support: int) -> Iterator[Graph]:
    """Detach one leaf of `support` and hang it from the end of another pendant path."""
    leaves = tree.leaves()
    own = [v for v in tree.neighbours(support) if tree.degree(v) == 1]
    if not own:
        return
    moved = own[0]
    kept = [edge for edge in tree.edges() if edge != (min(support, moved), max(support, moved))]
    for target in leaves:
        if target == moved or target in own:
            continue
        yield build_graph(tree.n, kept + [(target, moved)])
