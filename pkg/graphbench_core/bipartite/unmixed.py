"""
Unmixed bipartite graphs: every minimal vertex cover has the same size.

The structural test pairs the parts by a perfect matching x_i y_i and asks that x_i y_j and
x_j y_k force x_i y_k.  When the graph is unmixed the condition holds for every perfect
matching, so a single matching found by Hopcroft-Karp decides the question.
"""
from typing import Dict, List, Optional

import networkx as nx

from graphbench_core.errors import CapacityError, PreconditionError
from graphbench_core.graph.codec import to_networkx
from graphbench_core.graph.graph import Bipartition, Graph, bits

MAX_UNMIXED_SIDE = 12
MAX_COVER_ORACLE_VERTICES = 16


def _check_parts(g: Graph, bip: Bipartition):
    size_a, size_b = bip.sizes
    if size_a != size_b:
        raise PreconditionError(f"Unmixedness is tested on balanced parts, got {size_a} and {size_b}")
    if size_a > MAX_UNMIXED_SIDE:
        raise CapacityError(f"Unmixedness is decided up to {MAX_UNMIXED_SIDE} vertices per side",
                            module='bipartite', limit=MAX_UNMIXED_SIDE)
    isolated = [v for v in range(g.n) if g.degree(v) == 0]
    if isolated:
        raise PreconditionError(f"Vertices {isolated} are isolated")


def perfect_matching(g: Graph, bip: Bipartition) -> Optional[Dict[int, int]]:
    """A perfect matching from part A to part B, or None."""
    matching = nx.bipartite.hopcroft_karp_matching(to_networkx(g), top_nodes=set(bip.part_a))
    pairs = {x: matching[x] for x in bip.part_a if x in matching}
    if len(pairs) != len(bip.part_a) or len(bip.part_a) != len(bip.part_b):
        return None
    return pairs


def violated_transitivity(g: Graph, pairs: Dict[int, int]):
    """First (x_i, y_j, y_k) with x_i y_j and x_j y_k edges but x_i y_k missing, or None."""
    partner_of_y = {y: x for x, y in pairs.items()}
    for x_i, y_i in pairs.items():
        for y_j in bits(g.rows[x_i]):
            if y_j == y_i:
                continue
            x_j = partner_of_y[y_j]
            for y_k in bits(g.rows[x_j]):
                if y_k in (y_i, y_j):
                    continue
                if not g.has_edge(x_i, y_k):
                    return x_i, y_j, y_k
    return None


def is_unmixed(g: Graph, bip: Bipartition) -> bool:
    _check_parts(g, bip)
    pairs = perfect_matching(g, bip)
    if pairs is None:
        # Part A is a minimal cover of size g, and Konig gives a smaller one
        return False
    return violated_transitivity(g, pairs) is None


def minimal_vertex_covers(g: Graph) -> List[int]:
    """Bit masks of all minimal vertex covers: complements of maximal independent sets."""
    if g.n > MAX_COVER_ORACLE_VERTICES:
        raise CapacityError(f"Minimal covers are enumerated up to {MAX_COVER_ORACLE_VERTICES} vertices",
                            module='bipartite', limit=MAX_COVER_ORACLE_VERTICES)
    full = (1 << g.n) - 1
    covers = []
    for independent in nx.find_cliques(to_networkx(g.complement())):
        covers.append(full & ~sum(1 << v for v in independent))
    return sorted(covers)


def is_unmixed_by_covers(g: Graph) -> bool:
    sizes = {bin(cover).count('1') for cover in minimal_vertex_covers(g)}
    return len(sizes) <= 1
