"""
Exterior covers of a relation and its minimal exterior pairs.

The exterior dimension equals the size of a maximum disjoint subgraph (a matching), and a
minimum vertex cover of the matching gives an explicit minimal pair.
"""
import logging
from typing import List, Tuple

import networkx as nx

from graphbench_core.cover.relation import ExteriorPair, RelationGraph, popcount
from graphbench_core.errors import CapacityError
from graphbench_core.graph.graph import bits

MAX_MEPS_SIDE = 12

log = logging.getLogger('graphbench.cover')


def maximum_matching(k: RelationGraph) -> dict:
    """Mate of every matched element of S, as {s: t}."""
    graph = k.to_networkx()
    top = [('s', s) for s in range(k.p)]
    matching = nx.bipartite.hopcroft_karp_matching(graph, top_nodes=top)
    return {s: matching[('s', s)][1] for s in range(k.p) if ('s', s) in matching}


def max_disjoint_subgraph(k: RelationGraph) -> List[Tuple[int, int]]:
    return sorted(maximum_matching(k).items())


def exterior_dimension(k: RelationGraph) -> Tuple[int, ExteriorPair]:
    graph = k.to_networkx()
    top = [('s', s) for s in range(k.p)]
    matching = nx.bipartite.hopcroft_karp_matching(graph, top_nodes=top)
    cover = nx.bipartite.to_vertex_cover(graph, matching, top_nodes=top)
    pair = ExteriorPair(sum(1 << i for side, i in cover if side == 's'),
                        sum(1 << j for side, j in cover if side == 't'))
    return len(matching) // 2, pair


def _check_meps_size(k: RelationGraph):
    if k.p > MAX_MEPS_SIDE or k.q > MAX_MEPS_SIDE:
        raise CapacityError(f"Minimal exterior pairs are enumerated up to {MAX_MEPS_SIDE} elements per side",
                            module='cover', limit=MAX_MEPS_SIDE)


def enumerate_meps(k: RelationGraph) -> List[ExteriorPair]:
    """Every cover of weight E(K), sorted by (A, B) masks."""
    _check_meps_size(k)
    if k.p > k.q:
        return sorted(pair.transposed() for pair in enumerate_meps(k.transpose()))
    dimension, _ = exterior_dimension(k)
    found = []
    for a in range(1 << k.p):
        # Once A is chosen the smallest B is forced, and a minimal pair cannot carry more
        b = k.neighbourhood(k.full_s & ~a)
        if popcount(a) + popcount(b) == dimension:
            found.append(ExteriorPair(a, b))
    return sorted(found)


def interior_dimension(j: RelationGraph) -> int:
    """Largest |A'| + |B'| over nonempty A', B' with A' x B' inside J, 0 when there is none."""
    _check_meps_size(j)
    best = 0
    for a in range(1, 1 << j.p):
        inside = j.full_t
        for s in bits(a):
            inside &= j.rows[s]
        if inside:
            best = max(best, popcount(a) + popcount(inside))
    return best


def inadmissible_edges(k: RelationGraph) -> List[Tuple[int, int]]:
    """Edges of K inside the union of A x B over the minimal exterior pairs."""
    inadmissible = set()
    for pair in enumerate_meps(k):
        for s in bits(pair.a):
            inadmissible.update((s, t) for t in bits(k.rows[s] & pair.b))
    return sorted(inadmissible)
