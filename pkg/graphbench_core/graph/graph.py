"""
Simple undirected graphs on at most 64 vertices.

Adjacency is kept as one integer bit row per vertex, bit j of row i set when i ~ j.
Graphs are immutable once built and safe to share between worker threads.
"""
from collections import deque
from itertools import combinations
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from graphbench_core.errors import CapacityError, GraphValidationError, PreconditionError

MAX_VERTICES = 64
MAX_CONNECTIVITY_VERTICES = 16


def bits(mask: int):
    """Yield the set bit positions of mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    __slots__ = ('n', 'rows', '_degrees')

    def __init__(self, n: int, rows: Sequence[int]):
        self.n = n
        self.rows = tuple(rows)
        self._degrees = tuple(bin(row).count('1') for row in self.rows)

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.rows == other.rows

    def __hash__(self):
        return hash((self.n, self.rows))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"

    @property
    def m(self) -> int:
        return sum(self._degrees) // 2

    def degree(self, v: int) -> int:
        return self._degrees[v]

    def degrees(self) -> Tuple[int, ...]:
        return self._degrees

    @property
    def max_degree(self) -> int:
        return max(self._degrees)

    @property
    def min_degree(self) -> int:
        return min(self._degrees)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbours(self, v: int) -> List[int]:
        return list(bits(self.rows[v]))

    def closed_neighbourhood(self, v: int) -> int:
        return self.rows[v] | (1 << v)

    def edges(self) -> List[Tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.rows[u] >> (u + 1) << (u + 1))]

    def leaves(self) -> List[int]:
        return [v for v in range(self.n) if self._degrees[v] == 1]

    def adjacency_matrix(self) -> np.ndarray:
        matrix = np.zeros((self.n, self.n), dtype=float)
        for u, v in self.edges():
            matrix[u, v] = matrix[v, u] = 1.0
        return matrix

    def complement(self) -> 'Graph':
        full = (1 << self.n) - 1
        return Graph(self.n, [full & ~row & ~(1 << v) for v, row in enumerate(self.rows)])

    def induced_subgraph(self, vertices: Sequence[int]) -> 'Graph':
        """Subgraph on the given vertices, relabelled 0.. in the order given."""
        position = {v: index for index, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            row = 0
            for w in bits(self.rows[v]):
                if w in position:
                    row |= 1 << position[w]
            rows.append(row)
        return Graph(len(vertices), rows)

    def remove_vertices(self, removed: Iterable[int]) -> Optional['Graph']:
        removed = set(removed)
        kept = [v for v in range(self.n) if v not in removed]
        return self.induced_subgraph(kept) if kept else None

    def relabel(self, permutation: Sequence[int]) -> 'Graph':
        """Graph with vertex v renamed to permutation[v]."""
        rows = [0] * self.n
        for v, row in enumerate(self.rows):
            image = 0
            for w in bits(row):
                image |= 1 << permutation[w]
            rows[permutation[v]] = image
        return Graph(self.n, rows)

    def add_edges(self, edges: Iterable[Tuple[int, int]]) -> 'Graph':
        return build_graph(self.n, self.edges() + list(edges))


class DegreeSequence:
    """A degree vector stored largest first."""
    __slots__ = ('degrees',)

    def __init__(self, degrees: Iterable[int]):
        degrees = tuple(int(d) for d in degrees)
        if any(d < 0 for d in degrees):
            raise PreconditionError(f"Degrees must be non-negative: {degrees}")
        if any(a < b for a, b in zip(degrees, degrees[1:])):
            raise PreconditionError(f"Degree sequence must be non-increasing: {degrees}")
        self.degrees = degrees

    @classmethod
    def from_unsorted(cls, degrees: Iterable[int]) -> 'DegreeSequence':
        return cls(sorted(degrees, reverse=True))

    def __len__(self):
        return len(self.degrees)

    def __iter__(self):
        return iter(self.degrees)

    def __getitem__(self, item):
        return self.degrees[item]

    def __eq__(self, other):
        return isinstance(other, DegreeSequence) and self.degrees == other.degrees

    def __hash__(self):
        return hash(self.degrees)

    def __repr__(self):
        return f"DegreeSequence{self.degrees}"

    @property
    def total(self) -> int:
        return sum(self.degrees)

    @property
    def is_graphical(self) -> bool:
        return is_graphical(self.degrees)

    @property
    def is_tree_realizable(self) -> bool:
        if len(self.degrees) == 1:
            return self.degrees == (0,)
        return all(d >= 1 for d in self.degrees) and self.total == 2 * (len(self.degrees) - 1)


def is_graphical(degrees: Sequence[int]) -> bool:
    """Erdos-Gallai test on a sequence in any order."""
    degrees = sorted(degrees, reverse=True)
    if sum(degrees) % 2 or any(d < 0 for d in degrees):
        return False
    n = len(degrees)
    prefix = 0
    for k in range(1, n + 1):
        prefix += degrees[k - 1]
        if prefix > k * (k - 1) + sum(min(d, k) for d in degrees[k:]):
            return False
    return True


class Bipartition:
    """Side assignment of every vertex, 0 for part A and 1 for part B."""
    __slots__ = ('side',)

    def __init__(self, side: Sequence[int]):
        self.side = tuple(side)

    @property
    def part_a(self) -> Tuple[int, ...]:
        return tuple(v for v, s in enumerate(self.side) if s == 0)

    @property
    def part_b(self) -> Tuple[int, ...]:
        return tuple(v for v, s in enumerate(self.side) if s == 1)

    @property
    def sizes(self) -> Tuple[int, int]:
        return len(self.part_a), len(self.part_b)

    def swapped(self) -> 'Bipartition':
        return Bipartition(1 - s for s in self.side)

    def __eq__(self, other):
        return isinstance(other, Bipartition) and self.side == other.side

    def __hash__(self):
        return hash(self.side)

    def __repr__(self):
        return f"Bipartition(A={self.part_a}, B={self.part_b})"


def build_graph(n: int, edges: Iterable[Tuple[int, int]]) -> Graph:
    if n > MAX_VERTICES:
        raise CapacityError(f"Graphs are limited to {MAX_VERTICES} vertices, got {n}",
                            module='graph', limit=MAX_VERTICES)
    if n < 1:
        raise GraphValidationError(f"A graph needs at least one vertex, got n={n}")
    rows = [0] * n
    for edge in edges:
        u, v = (int(x) for x in edge)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphValidationError(f"Edge ({u}, {v}) has a vertex outside 0..{n - 1}")
        if u == v:
            raise GraphValidationError(f"Self-loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, rows)


def degree_sequence(g: Graph) -> DegreeSequence:
    return DegreeSequence.from_unsorted(g.degrees())


def component_of(g: Graph, start: int, allowed: int = None) -> int:
    """Bit mask of the vertices reachable from start, moving only through allowed."""
    allowed = (1 << g.n) - 1 if allowed is None else allowed
    seen = 1 << start
    frontier = seen
    while frontier:
        reach = 0
        for v in bits(frontier):
            reach |= g.rows[v]
        frontier = reach & allowed & ~seen
        seen |= frontier
    return seen


def is_connected(g: Graph) -> bool:
    return component_of(g, 0) == (1 << g.n) - 1


def is_tree(g: Graph) -> bool:
    return g.m == g.n - 1 and is_connected(g)


def bipartition(g: Graph) -> Optional[Bipartition]:
    side = [-1] * g.n
    for root in range(g.n):
        if side[root] >= 0:
            continue
        side[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in bits(g.rows[v]):
                if side[w] < 0:
                    side[w] = 1 - side[v]
                    queue.append(w)
                elif side[w] == side[v]:
                    return None
    return Bipartition(side)


def vertex_connectivity(g: Graph) -> int:
    """Size of a smallest vertex cut, n-1 for complete graphs."""
    if g.n > MAX_CONNECTIVITY_VERTICES:
        raise CapacityError(f"Vertex connectivity is exhaustive up to {MAX_CONNECTIVITY_VERTICES} vertices",
                            module='graph', limit=MAX_CONNECTIVITY_VERTICES)
    if g.m == g.n * (g.n - 1) // 2:
        return g.n - 1
    full = (1 << g.n) - 1
    for size in range(g.n - 1):
        for cut in combinations(range(g.n), size):
            mask = 0
            for v in cut:
                mask |= 1 << v
            remaining = full & ~mask
            start = (remaining & -remaining).bit_length() - 1
            if component_of(g, start, remaining) != remaining:
                return size
    return g.n - 1


def is_k_connected(g: Optional[Graph], k: int) -> bool:
    if k <= 0:
        return True
    return g is not None and g.n > k and vertex_connectivity(g) >= k


def is_spider(g: Graph) -> Optional[Tuple[int, ...]]:
    """Leg lengths, longest first, when g is a tree with exactly one vertex of degree at least 3."""
    if not is_tree(g):
        return None
    centres = [v for v in range(g.n) if g.degree(v) >= 3]
    if len(centres) != 1:
        return None
    centre = centres[0]
    legs = []
    for start in g.neighbours(centre):
        length, previous, current = 1, centre, start
        while g.degree(current) == 2:
            previous, current = current, next(w for w in g.neighbours(current) if w != previous)
            length += 1
        legs.append(length)
    return tuple(sorted(legs, reverse=True))
