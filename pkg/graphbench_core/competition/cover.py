"""
Edge clique covers: the triangle construction for complete tripartite graphs and a
brute-force minimum cover over maximal cliques.
"""
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

import networkx as nx

from graphbench_core.errors import CapacityError, PreconditionError
from graphbench_core.graph.codec import to_networkx
from graphbench_core.graph.graph import Graph, bits, build_graph

MAX_COVER_VERTICES = 7


class CliqueCover:
    __slots__ = ('graph', 'cliques')

    def __init__(self, graph: Graph, cliques: Sequence[Sequence[int]]):
        self.graph = graph
        self.cliques = [tuple(sorted(c)) for c in cliques]

    def __len__(self):
        return len(self.cliques)

    def __repr__(self):
        return f"CliqueCover({len(self.cliques)} cliques: {self.cliques})"

    def is_valid(self) -> bool:
        """Every member is a clique and every edge lies in one of them."""
        covered = set()
        for clique in self.cliques:
            for u, v in combinations(clique, 2):
                if not self.graph.has_edge(u, v):
                    return False
                covered.add((u, v))
        return covered == set(self.graph.edges())


def complete_multipartite(parts: Sequence[int]) -> Graph:
    """K_{n1,...,nr} with the parts laid out consecutively from vertex 0."""
    if not parts or any(size < 1 for size in parts):
        raise PreconditionError(f"Parts must be positive, got {tuple(parts)}")
    owner = [index for index, size in enumerate(parts) for _ in range(size)]
    n = len(owner)
    return build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if owner[u] != owner[v]])


def check_sorted(parts: Sequence[int]):
    if list(parts) != sorted(parts, reverse=True) or any(size < 1 for size in parts):
        raise PreconditionError(f"Parts must be positive and non-increasing, got {tuple(parts)}")


def tripartite_clique_cover(n1: int, n2: int, n3: int) -> CliqueCover:
    """The n1 n2 triangles {a_i, b_j, c_((i+j) mod n3)}."""
    check_sorted((n1, n2, n3))
    g = complete_multipartite((n1, n2, n3))
    triangles = [(i, n1 + j, n1 + n2 + (i + j) % n3) for i in range(n1) for j in range(n2)]
    return CliqueCover(g, triangles)


def maximal_cliques(g: Graph) -> List[int]:
    """Maximal cliques with at least one edge, as bit masks."""
    cliques = [sum(1 << v for v in clique) for clique in nx.find_cliques(to_networkx(g)) if len(clique) > 1]
    return sorted(cliques)


def _edge_masks(g: Graph, cliques: Sequence[int]) -> Tuple[List[Tuple[int, int]], List[int]]:
    edges = g.edges()
    index = {edge: i for i, edge in enumerate(edges)}
    masks = []
    for clique in cliques:
        members = list(bits(clique))
        masks.append(sum(1 << index[(u, v)] for u, v in combinations(members, 2)))
    return edges, masks


def min_set_cover(target: int, masks: Sequence[int], limit: Optional[int] = None) -> Optional[List[int]]:
    """Fewest masks whose union contains target, by iterative deepening; None past limit."""
    useful = [i for i, mask in enumerate(masks) if mask & target]
    largest = max((bin(masks[i] & target).count('1') for i in useful), default=0)

    def search(remaining: int, depth: int, chosen: List[int]) -> Optional[List[int]]:
        if not remaining:
            return chosen
        if depth == 0 or -(-bin(remaining).count('1') // largest) > depth:
            return None
        lowest = remaining & -remaining
        for i in useful:
            if masks[i] & lowest:
                found = search(remaining & ~masks[i], depth - 1, chosen + [i])
                if found is not None:
                    return found
        return None

    if not target:
        return []
    ceiling = len(useful) if limit is None else min(limit, len(useful))
    for depth in range(1, ceiling + 1):
        found = search(target, depth, [])
        if found is not None:
            return found
    return None


def min_edge_clique_cover(g: Graph) -> CliqueCover:
    if g.n > MAX_COVER_VERTICES:
        raise CapacityError(f"Minimum edge clique covers are searched up to {MAX_COVER_VERTICES} vertices",
                            module='competition', limit=MAX_COVER_VERTICES)
    cliques = maximal_cliques(g)
    edges, masks = _edge_masks(g, cliques)
    chosen = min_set_cover((1 << len(edges)) - 1, masks)
    return CliqueCover(g, [list(bits(cliques[i])) for i in chosen])


def vertex_clique_cover_number(g: Graph) -> int:
    """Fewest cliques covering every vertex."""
    if g.n == 0:
        return 0
    cliques = sorted(sum(1 << v for v in clique) for clique in nx.find_cliques(to_networkx(g)))
    return len(min_set_cover((1 << g.n) - 1, cliques))


def neighbourhood_lower_bound(g: Graph) -> int:
    """max over r of min over |S| = r of theta(E(S)) - r + 1, E(S) the edges meeting S."""
    if g.n > MAX_COVER_VERTICES:
        raise CapacityError(f"Neighbourhood bounds are searched up to {MAX_COVER_VERTICES} vertices",
                            module='competition', limit=MAX_COVER_VERTICES)
    cliques = maximal_cliques(g)
    edges, masks = _edge_masks(g, cliques)
    best = None
    for r in range(1, g.n + 1):
        smallest = None
        for subset in combinations(range(g.n), r):
            inside = set(subset)
            target = sum(1 << i for i, (u, v) in enumerate(edges) if u in inside or v in inside)
            value = len(min_set_cover(target, masks))
            smallest = value if smallest is None else min(smallest, value)
        bound = smallest - r + 1
        best = bound if best is None else max(best, bound)
    return best
