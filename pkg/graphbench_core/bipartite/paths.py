"""
Paths that pass through every vertex of one part of a bipartite graph.
"""
from typing import List, Optional

from graphbench_core.errors import CapacityError, DomainError, PreconditionError
from graphbench_core.graph.graph import Bipartition, Graph, bipartition, bits, component_of

MAX_PATH_VERTICES = 12


def smaller_part_last(bip: Bipartition) -> Bipartition:
    """Orient the bipartition so that B is the smaller part."""
    size_a, size_b = bip.sizes
    return bip.swapped() if size_b > size_a else bip


def path_through_all_b(g: Graph, u: int, v: int, bip: Optional[Bipartition] = None) -> Optional[List[int]]:
    """A u-v path containing every vertex of B, or None.

    Without a bipartition the graph's own one is used with B the smaller part.
    """
    if g.n > MAX_PATH_VERTICES:
        raise CapacityError(f"Spanning path search is exhaustive up to {MAX_PATH_VERTICES} vertices",
                            module='bipartite', limit=MAX_PATH_VERTICES)
    for vertex in (u, v):
        if not 0 <= vertex < g.n:
            raise DomainError(f"Vertex {vertex} is not in 0..{g.n - 1}", vertex=vertex)
    if bip is None:
        bip = bipartition(g)
        if bip is None:
            raise PreconditionError("Spanning B paths are defined on bipartite graphs")
        bip = smaller_part_last(bip)

    target = sum(1 << b for b in bip.part_b)
    if u == v:
        return [u] if target & ~(1 << u) == 0 else None
    full = (1 << g.n) - 1
    end = 1 << v

    def extend(path: List[int], visited: int) -> Optional[List[int]]:
        current = path[-1]
        missing = target & ~visited & ~end
        # v closes the path, so everything still missing must be reachable without crossing it
        reach = component_of(g, current, (full & ~visited & ~end) | (1 << current))
        if missing & ~reach:
            return None
        for w in bits(g.rows[current] & ~visited):
            if w == v:
                if not missing:
                    return path + [v]
                continue
            found = extend(path + [w], visited | 1 << w)
            if found is not None:
                return found
        return None

    return extend([u], 1 << u)
