"""
Unlabelled graph enumeration by vertex augmentation.

Each level extends every representative of the previous level by one vertex joined to every
subset of the old vertices, and keeps one graph per canonical code.
"""
import functools
from itertools import combinations_with_replacement
from typing import Dict, List

from graphbench_core.errors import CapacityError
from graphbench_core.graph.canonical import graph_code
from graphbench_core.graph.graph import Graph, is_connected

MAX_ENUMERATION_VERTICES = 8
MAX_BIPARTITE_VERTICES = 10


def _next_level(graphs: Dict[bytes, Graph]) -> Dict[bytes, Graph]:
    out: Dict[bytes, Graph] = {}
    for g in graphs.values():
        n = g.n
        for neighbourhood in range(1 << n):
            rows = [row | ((neighbourhood >> v & 1) << n) for v, row in enumerate(g.rows)]
            rows.append(neighbourhood)
            extended = Graph(n + 1, rows)
            code = graph_code(extended)
            if code not in out:
                out[code] = extended
    return out


@functools.lru_cache(maxsize=None)
def _level(n: int) -> Dict[bytes, Graph]:
    if n == 1:
        single = Graph(1, [0])
        return {graph_code(single): single}
    return _next_level(_level(n - 1))


def enumerate_graphs(n: int, connected: bool = False) -> List[Graph]:
    """One graph per isomorphism class on n vertices, ordered by canonical code."""
    if n > MAX_ENUMERATION_VERTICES:
        raise CapacityError(f"General graph enumeration is limited to {MAX_ENUMERATION_VERTICES} vertices",
                            module='graph', limit=MAX_ENUMERATION_VERTICES)
    level = _level(n)
    return [level[code] for code in sorted(level) if not connected or is_connected(level[code])]


def enumerate_bipartite(a: int, b: int, connected: bool = False) -> List[Graph]:
    """Bipartite graphs with part A = 0..a-1 and part B = a..a+b-1, one per isomorphism class."""
    if a + b > MAX_BIPARTITE_VERTICES:
        raise CapacityError(f"Bipartite enumeration is limited to {MAX_BIPARTITE_VERTICES} vertices",
                            module='graph', limit=MAX_BIPARTITE_VERTICES)
    found: Dict[bytes, Graph] = {}
    for masks in combinations_with_replacement(range(1 << b), a):
        rows = [mask << a for mask in masks]
        rows.extend(0 for _ in range(b))
        for u, mask in enumerate(masks):
            for j in range(b):
                if mask >> j & 1:
                    rows[a + j] |= 1 << u
        g = Graph(a + b, rows)
        if connected and not is_connected(g):
            continue
        found.setdefault(graph_code(g), g)
    return [found[code] for code in sorted(found)]
