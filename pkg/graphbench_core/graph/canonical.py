"""
Canonical codes: equal codes exactly when the graphs are isomorphic.

Trees are coded by the parenthesis string of the centroid-rooted tree (minimum over the two
rootings of a bicentroid).  Other graphs are coded by the smallest adjacency string reachable
through individualisation and colour refinement, with twin cells searched only once.
"""
from typing import List, Optional, Sequence, Tuple

from graphbench_core.errors import CapacityError
from graphbench_core.graph.graph import Graph, bits, is_tree

MAX_GENERAL_VERTICES = 16
MAX_TREE_VERTICES = 24

TREE_PREFIX = b'T'
GRAPH_PREFIX = b'G'


def centroids(g: Graph) -> List[int]:
    """The one or two vertices minimising the largest branch of a tree."""
    n = g.n
    parent = [-1] * n
    order = [0]
    seen = 1
    for v in order:
        for w in bits(g.rows[v] & ~seen):
            seen |= 1 << w
            parent[w] = v
            order.append(w)
    size = [1] * n
    for v in reversed(order[1:]):
        size[parent[v]] += size[v]
    heaviest = []
    for v in range(n):
        branch = n - size[v]
        for w in g.neighbours(v):
            if w != parent[v]:
                branch = max(branch, size[w])
        heaviest.append(branch)
    best = min(heaviest)
    return [v for v in range(n) if heaviest[v] == best]


def rooted_code(g: Graph, root: int, parent: int = -1) -> str:
    children = sorted(rooted_code(g, w, root) for w in g.neighbours(root) if w != parent)
    return '(' + ''.join(children) + ')'


def tree_code(g: Graph) -> bytes:
    if g.n > MAX_TREE_VERTICES:
        raise CapacityError(f"Tree codes are limited to {MAX_TREE_VERTICES} vertices",
                            module='graph', limit=MAX_TREE_VERTICES)
    code = min(rooted_code(g, c) for c in centroids(g))
    return TREE_PREFIX + bytes([g.n]) + code.encode()


def _refine(g: Graph, colours: Sequence[int]) -> List[int]:
    """Coarsest equitable refinement; colour order is derived only from invariant signatures."""
    colours = list(colours)
    while True:
        signatures = [(colours[v], tuple(sorted(colours[w] for w in bits(g.rows[v])))) for v in range(g.n)]
        ranking = {signature: rank for rank, signature in enumerate(sorted(set(signatures)))}
        refined = [ranking[signature] for signature in signatures]
        if len(ranking) == len(set(colours)):
            return refined
        colours = refined


def _are_twins(g: Graph, cell: Sequence[int]) -> bool:
    first = cell[0]
    for other in cell[1:]:
        if g.rows[first] & ~(1 << other) != g.rows[other] & ~(1 << first):
            return False
    return True


def _leaf_rows(g: Graph, colours: Sequence[int]) -> Tuple[int, ...]:
    rows = [0] * g.n
    for v in range(g.n):
        image = 0
        for w in bits(g.rows[v]):
            image |= 1 << colours[w]
        rows[colours[v]] = image
    return tuple(rows)


def _search(g: Graph, colours: List[int], best: Optional[Tuple[int, ...]]) -> Tuple[int, ...]:
    colours = _refine(g, colours)
    if len(set(colours)) == g.n:
        rows = _leaf_rows(g, colours)
        return rows if best is None or rows < best else best

    cells = {}
    for v, colour in enumerate(colours):
        cells.setdefault(colour, []).append(v)
    target = next(cells[colour] for colour in sorted(cells) if len(cells[colour]) > 1)
    branches = target[:1] if _are_twins(g, target) else target

    for v in branches:
        individualised = [2 * colour for colour in colours]
        individualised[v] -= 1
        best = _search(g, individualised, best)
    return best


def graph_code(g: Graph) -> bytes:
    if g.n > MAX_GENERAL_VERTICES:
        raise CapacityError(f"General canonical codes are limited to {MAX_GENERAL_VERTICES} vertices",
                            module='graph', limit=MAX_GENERAL_VERTICES)
    rows = _search(g, [0] * g.n, None)
    return GRAPH_PREFIX + bytes([g.n]) + b''.join(row.to_bytes(8, 'big') for row in rows)


def canonical_code(g: Graph) -> bytes:
    if is_tree(g):
        return tree_code(g)
    return graph_code(g)
