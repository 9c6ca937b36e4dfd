"""
Redundant tree embeddings: a copy of a tree whose removal leaves a k-connected graph.
"""
from collections import deque
from typing import Dict, List, Optional

from graphbench_core.errors import CapacityError, PreconditionError
from graphbench_core.graph.graph import Bipartition, Graph, bipartition, bits, is_k_connected, is_tree

MAX_HOST_VERTICES = 10
MAX_REDUNDANCY = 3


def _bfs_order(t: Graph) -> List[tuple]:
    """(vertex, parent) pairs in breadth-first order from vertex 0."""
    order = [(0, -1)]
    seen = 1
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for w in bits(t.rows[v] & ~seen):
            seen |= 1 << w
            order.append((w, v))
            queue.append(w)
    return order


def find_embedding(t: Graph, g: Graph, k: int, tree_parts: Optional[Bipartition] = None,
                   host_parts: Optional[Bipartition] = None) -> Optional[Dict[int, int]]:
    """Injective map of t into g along edges with g minus the image k-connected.

    With both bipartitions given, part i of the tree must land in part i of the host.
    """
    if g.n > MAX_HOST_VERTICES or k > MAX_REDUNDANCY:
        raise CapacityError(f"Embedding search is limited to {MAX_HOST_VERTICES} host vertices "
                            f"and k <= {MAX_REDUNDANCY}", module='bipartite', limit=MAX_HOST_VERTICES)
    if not is_tree(t):
        raise PreconditionError("Only trees are embedded")
    if bipartition(g) is None:
        raise PreconditionError("The host graph must be bipartite")
    if t.n > g.n:
        return None

    constrained = tree_parts is not None and host_parts is not None
    order = _bfs_order(t)
    image: Dict[int, int] = {}

    def allowed(tree_vertex: int, host_vertex: int) -> bool:
        return not constrained or tree_parts.side[tree_vertex] == host_parts.side[host_vertex]

    def place(position: int, used: int) -> bool:
        if position == len(order):
            return is_k_connected(g.remove_vertices(image.values()), k)
        vertex, parent = order[position]
        candidates = bits(g.rows[image[parent]] & ~used) if parent >= 0 else range(g.n)
        for host in candidates:
            if not allowed(vertex, host):
                continue
            image[vertex] = host
            if place(position + 1, used | 1 << host):
                return True
            del image[vertex]
        return False

    if not place(0, 0):
        return None
    return dict(sorted(image.items()))
