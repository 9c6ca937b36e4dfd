"""
Checkers for the competition number and edge clique cover claims on complete multipartite
graphs.
"""
from typing import List, Tuple

from graphbench_core.competition.cover import (complete_multipartite, min_edge_clique_cover,
                                               neighbourhood_lower_bound, tripartite_clique_cover,
                                               vertex_clique_cover_number)
from graphbench_core.competition.kappa import balanced_lower_bounds, multipartite_bounds, tripartite_kappa
from graphbench_core.competition.oracle import MAX_ORACLE_VERTICES, kappa_oracle
from graphbench_core.graph.graph import Graph
from graphbench_core.verification.registry import claim
from graphbench_core.verification.report import ClaimTally
from graphbench_core.verification.sweep import Sweeper

ORACLE_NOTE = "instances whose competition number exceeds kmax are scanned but do not qualify"
NEIGHBOURHOOD_NOTE = ("theta_v(G_u) is read as the vertex clique cover number of the neighbourhood subgraph; "
                      "its minimum is reported, not asserted")
ADMISSIBLE_NOTE = "r is taken to lie in the admissible range of the balanced clique cover result for every K_r(n)"


def partitions(total: int, parts: int, largest: int = None) -> List[Tuple[int, ...]]:
    """Non-increasing sequences of exactly `parts` positive integers summing to total."""
    largest = total if largest is None else largest
    if parts == 0:
        return [()] if total == 0 else []
    found = []
    for first in range(min(largest, total - parts + 1), 0, -1):
        found.extend((first,) + rest for rest in partitions(total - first, parts - 1, first))
    return found


def multipartite_instances(max_n: int, min_parts: int = 2, max_parts: int = None) -> List[Tuple[int, ...]]:
    instances = []
    for total in range(min_parts, max_n + 1):
        for r in range(min_parts, min(total, max_parts or total) + 1):
            instances.extend(partitions(total, r))
    return instances


def key(parts: Tuple[int, ...]) -> str:
    return 'K' + ','.join(str(size) for size in parts)


def neighbourhood_cover_minimum(g: Graph) -> int:
    """min over u of theta_v of the subgraph induced by N(u)."""
    return min(vertex_clique_cover_number(g.induced_subgraph(list(g.neighbours(u)))) for u in range(g.n))


@claim('tripartite-kappa', anchor="kappa(K_{n1,n2,n3}) = n1 n2 - n + 2 if n2 >= n3 + 2; n1 n2 - n + 3 if n2 = "
                                  "n3 + 1 or n2 = n3 = 1; n1 n2 - n + 4 if n2 = n3 >= 2",
       module='competition', max_n=6, kmax=4)
def check_tripartite_kappa(params: dict, sweeper: Sweeper) -> ClaimTally:
    def check(parts: Tuple[int, ...], tally: ClaimTally):
        predicted = tripartite_kappa(*parts)
        found = kappa_oracle(complete_multipartite(parts), params['kmax'])
        tally.scanned(found is not None or predicted <= params['kmax'])
        if found != (predicted if predicted <= params['kmax'] else None):
            tally.fail(key(parts), predicted=predicted, oracle=found)
        elif found is not None:
            tally.witness(key(parts), kappa=found)
    instances = multipartite_instances(min(params['max_n'], MAX_ORACLE_VERTICES), min_parts=3, max_parts=3)
    return sweeper.sweep(instances, check)


@claim('tripartite-clique-cover', anchor="the collection Gamma = {Delta_{i,j}} forms a minimal edge clique cover "
                                         "of K_{n1,n2,n3}, showing that theta_e(K_{n1,n2,n3}) = n1 n2",
       module='competition', max_n=7)
def check_tripartite_cover(params: dict, sweeper: Sweeper) -> ClaimTally:
    def check(parts: Tuple[int, ...], tally: ClaimTally):
        tally.scanned()
        cover = tripartite_clique_cover(*parts)
        minimum = len(min_edge_clique_cover(cover.graph))
        if not cover.is_valid() or len(cover) != parts[0] * parts[1] or minimum != len(cover):
            tally.fail(key(parts), valid=cover.is_valid(), size=len(cover), minimum=minimum)
        else:
            tally.witness(key(parts), theta=minimum)
    return sweeper.sweep(multipartite_instances(params['max_n'], min_parts=3, max_parts=3), check)


@claim('multipartite-bounds', anchor="kappa(K_{n1,n2,...,nr}) >= min{2 n2 - 1, n1 + nr - 2}; kappa(K_{r(n)}) >= "
                                     "3n - 5, and n^2 - rn + 3r - 5 for n >= 3; kappa(K_{r(n)}) <= "
                                     "theta_e(K_{r(n)}) - 2n + 2", module='competition', max_n=6, kmax=4)
def check_multipartite_bounds(params: dict, sweeper: Sweeper) -> ClaimTally:
    def check(parts: Tuple[int, ...], tally: ClaimTally):
        found = kappa_oracle(complete_multipartite(parts), params['kmax'])
        tally.scanned(found is not None)
        if found is None:
            tally.note(ORACLE_NOTE)
            return
        balanced = len(set(parts)) == 1
        bounds = multipartite_bounds(parts, r_admissible=True)
        lower = [bounds.lower]
        if balanced:
            tally.note(ADMISSIBLE_NOTE)
            lower.extend(balanced_lower_bounds(len(parts), parts[0]))
        if max(lower) > found or (bounds.upper is not None and found > bounds.upper):
            tally.fail(key(parts), kappa=found, lower=max(lower), upper=bounds.upper)
        else:
            tally.witness(key(parts), kappa=found, lower=max(lower), upper=bounds.upper)
    instances = multipartite_instances(min(params['max_n'], MAX_ORACLE_VERTICES))
    return sweeper.sweep(instances, check)


@claim('clique-cover-lower-bound', anchor="kappa(G) >= min{theta(E(S)) : S subset of V(G), |S| = r} - r + 1",
       module='competition', max_n=6, kmax=4)
def check_clique_cover_lower_bound(params: dict, sweeper: Sweeper) -> ClaimTally:
    def check(parts: Tuple[int, ...], tally: ClaimTally):
        g = complete_multipartite(parts)
        found = kappa_oracle(g, params['kmax'])
        tally.scanned(found is not None)
        tally.note(NEIGHBOURHOOD_NOTE)
        if found is None:
            tally.note(ORACLE_NOTE)
            return
        bound = neighbourhood_lower_bound(g)
        if bound > found:
            tally.fail(key(parts), kappa=found, bound=bound)
        else:
            tally.witness(key(parts), kappa=found, bound=bound, neighbourhood_cover=neighbourhood_cover_minimum(g))
    instances = multipartite_instances(min(params['max_n'], MAX_ORACLE_VERTICES))
    return sweeper.sweep(instances, check)
