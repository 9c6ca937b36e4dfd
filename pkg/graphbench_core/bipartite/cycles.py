"""
Longest cycles in small graphs and the cycle-length bounds for bipartite graphs.
"""
from typing import List, Optional, Tuple

from graphbench_core.errors import CapacityError, PreconditionError
from graphbench_core.graph.canonical import canonical_code
from graphbench_core.graph.graph import Bipartition, Graph, bipartition, bits, is_connected, vertex_connectivity
from graphbench_core.verification.report import ClaimTally, VerificationReport

MAX_CYCLE_VERTICES = 14

MIN_DEGREE_BOUND = 'min-degree'
EDGE_COUNT_BOUND = 'edge-count'
CYCLE_BOUNDS = (MIN_DEGREE_BOUND, EDGE_COUNT_BOUND)


def longest_cycle(g: Graph) -> int:
    """Length of a longest cycle, 0 when g is a forest."""
    if g.n > MAX_CYCLE_VERTICES:
        raise CapacityError(f"Longest cycle search is exhaustive up to {MAX_CYCLE_VERTICES} vertices",
                            module='bipartite', limit=MAX_CYCLE_VERTICES)
    bip = bipartition(g)
    limit = g.n if bip is None else 2 * min(bip.sizes)
    best = 0

    def extend(start: int, v: int, visited: int, allowed: int, length: int) -> bool:
        nonlocal best
        if length >= 3 and g.rows[v] >> start & 1 and length > best:
            best = length
            if best == limit:
                return True
        for w in bits(g.rows[v] & allowed & ~visited):
            if extend(start, w, visited | 1 << w, allowed, length + 1):
                return True
        return False

    full = (1 << g.n) - 1
    for start in range(g.n):
        # Every cycle is found from its smallest vertex
        allowed = full & ~((1 << (start + 1)) - 1)
        if bin(allowed).count('1') + 1 <= best:
            break
        if extend(start, start, 1 << start, allowed, 1):
            break
    return best


def orientations(bip: Bipartition) -> List[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    """(A, B) with |A| >= |B|; both labelings when the parts are equal."""
    a, b = bip.part_a, bip.part_b
    if len(a) > len(b):
        return [(a, b)]
    if len(a) < len(b):
        return [(b, a)]
    return [(a, b), (b, a)]


def min_degree_cycle_bound(g: Graph, part_a, part_b) -> int:
    """2 min(|B|, k + l - 1, 2k - 2), or 2 min(|B|, 2k - 1) when k = l and |A| = |B|."""
    k = min(g.degree(v) for v in part_a)
    k_b = min(g.degree(v) for v in part_b)
    bound = 2 * min(len(part_b), k + k_b - 1, 2 * k - 2)
    if k == k_b and len(part_a) == len(part_b):
        bound = max(bound, 2 * min(len(part_b), 2 * k - 1))
    return bound


def edge_count_threshold(a: int, b: int, m: int) -> int:
    """More edges than this force a cycle of length at least 2m, for 2 <= m <= b <= a."""
    if b <= 2 * m - 2:
        return b + (a - 1) * (m - 1)
    return (b + a - 2 * m + 3) * (m - 1)


def check_min_degree_bound(g: Graph, tally: ClaimTally, circumference: Optional[int] = None):
    key = canonical_code(g).hex()
    bip = bipartition(g)
    qualifies = bip is not None and g.n >= 3 and is_connected(g) and vertex_connectivity(g) >= 2
    tally.scanned(qualifies)
    if not qualifies:
        return
    circumference = longest_cycle(g) if circumference is None else circumference
    for part_a, part_b in orientations(bip):
        bound = min_degree_cycle_bound(g, part_a, part_b)
        if circumference < bound:
            tally.fail(key, longest=circumference, bound=bound, parts=(len(part_a), len(part_b)))
            return
    tally.witness(key, longest=circumference)


def check_edge_count_bound(g: Graph, bip: Bipartition, tally: ClaimTally, circumference: Optional[int] = None):
    key = canonical_code(g).hex()
    checked = False
    for part_a, part_b in orientations(bip):
        a, b = len(part_a), len(part_b)
        for m in range(2, b + 1):
            threshold = edge_count_threshold(a, b, m)
            if g.m <= threshold:
                continue
            checked = True
            circumference = longest_cycle(g) if circumference is None else circumference
            if circumference < 2 * m:
                tally.fail(key, edges=g.m, threshold=threshold, cycle=2 * m, longest=circumference)
                tally.scanned()
                return
    tally.scanned(checked)


def check_cycle_bounds(g: Graph, which: str) -> VerificationReport:
    """Compare the longest cycle (or edge count) of one bipartite graph with its bound."""
    if which not in CYCLE_BOUNDS:
        raise ValueError(f"Unknown cycle bound {which}, expected one of {CYCLE_BOUNDS}")
    bip = bipartition(g)
    if bip is None:
        raise PreconditionError("Cycle bounds apply to bipartite graphs")
    tally = ClaimTally()
    if which == MIN_DEGREE_BOUND:
        check_min_degree_bound(g, tally)
        return tally.report('cycle-length-bound', "2-connected bipartite: a cycle of length at least "
                                                  "2 min(|B|, k + l - 1, 2k - 2)", 'bipartite')
    check_edge_count_bound(g, bip, tally)
    return tally.report('edge-count-bound', "|E(G)| > b + (a-1)(m-1) if b <= 2m-2, (b+a-2m+3)(m-1) otherwise",
                        'bipartite')
