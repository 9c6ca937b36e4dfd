"""
Competition number by exhaustive certificate search.

G together with k isolated vertices is the competition graph of an acyclic digraph exactly
when the vertices can be ordered so that each one, as prey, takes a clique of earlier
vertices as its predators and those cliques cover every edge.  A predator clique may be
enlarged to a clique that is maximal among the earlier vertices, and the k added vertices
go last, where they take maximal cliques of G.
"""
from itertools import combinations
from typing import Dict, List, Optional

from graphbench_core.competition.cover import min_set_cover
from graphbench_core.errors import CapacityError
from graphbench_core.graph.graph import Graph, bits

MAX_ORACLE_VERTICES = 6
MAX_ORACLE_K = 4


def _cliques(g: Graph) -> List[int]:
    """Every clique with at least two vertices, as a bit mask."""
    found = []
    for size in range(2, g.n + 1):
        for members in combinations(range(g.n), size):
            if all(g.has_edge(u, v) for u, v in combinations(members, 2)):
                found.append(sum(1 << v for v in members))
    return found


def kappa_oracle(g: Graph, kmax: int) -> Optional[int]:
    """Least k <= kmax for which a certificate exists, None when there is none."""
    if g.n > MAX_ORACLE_VERTICES or kmax > MAX_ORACLE_K:
        raise CapacityError(f"The competition oracle is limited to {MAX_ORACLE_VERTICES} vertices and "
                            f"kmax <= {MAX_ORACLE_K}", module='competition', limit=MAX_ORACLE_VERTICES)
    edges = g.edges()
    index = {edge: i for i, edge in enumerate(edges)}
    cliques = _cliques(g)
    edge_mask = {c: sum(1 << index[(u, v)] for u, v in combinations(list(bits(c)), 2)) for c in cliques}
    everything = (1 << len(edges)) - 1
    maximal = [c for c in cliques if not any(other != c and other & c == c for other in cliques)]
    maximal_masks = [edge_mask[c] for c in maximal]

    def prefix_maximal(prefix: int) -> List[int]:
        inside = [c for c in cliques if c & ~prefix == 0]
        return [c for c in inside if not any(other != c and other & c == c for other in inside)]

    choices: Dict[int, List[int]] = {}

    def options(prefix: int) -> List[int]:
        if prefix not in choices:
            choices[prefix] = [edge_mask[c] for c in prefix_maximal(prefix)] or [0]
        return choices[prefix]

    def feasible(k: int) -> bool:
        failed = set()

        def place(placed: int, covered: int) -> bool:
            if placed == (1 << g.n) - 1:
                residual = everything & ~covered
                return min_set_cover(residual, maximal_masks, limit=k) is not None if residual else True
            if (placed, covered) in failed:
                return False
            prefix_options = options(placed)
            for v in range(g.n):
                if placed >> v & 1:
                    continue
                for mask in prefix_options:
                    if place(placed | 1 << v, covered | mask):
                        return True
            failed.add((placed, covered))
            return False

        return place(0, 0)

    for k in range(kmax + 1):
        if feasible(k):
            return k
    return None
