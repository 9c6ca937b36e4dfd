"""
Checkers for the claims about bipartite graphs: equitable colouring, long cycles, spanning
paths, redundant tree embeddings, unmixedness and bi-holes.
"""
import functools
from typing import List, Tuple

import numpy as np

from graphbench_core.bipartite.bihole import BOTH_SIDES, ONE_SIDED, asymptotic_bihole_bound, bihole_threshold
from graphbench_core.bipartite.coloring import (equitable_chromatic_number, equitable_color, knn_condition,
                                                sparse_coloring_bound, tree_coloring_bound)
from graphbench_core.bipartite.cycles import (check_edge_count_bound, check_min_degree_bound, longest_cycle,
                                              orientations)
from graphbench_core.bipartite.embedding import find_embedding
from graphbench_core.bipartite.paths import path_through_all_b
from graphbench_core.bipartite.unmixed import is_unmixed, is_unmixed_by_covers
from graphbench_core.graph.canonical import canonical_code
from graphbench_core.graph.enumerate import enumerate_bipartite
from graphbench_core.graph.graph import Bipartition, Graph, bipartition, build_graph, is_k_connected
from graphbench_core.trees.enumerate import all_trees
from graphbench_core.verification.registry import claim
from graphbench_core.verification.report import ClaimTally
from graphbench_core.verification.sweep import Sweeper

MAX_RANDOM_SIDE = 7
EMBEDDING_NOTE = ("the strengthened minimum degree hypothesis names delta on both sides and an unexplained Delta^2; "
                  "only the plain embedding statement is checked")


def key(g: Graph) -> str:
    return canonical_code(g).hex()


def complete_bipartite(a: int, b: int) -> Graph:
    return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


@functools.lru_cache(maxsize=None)
def bipartite_hosts(max_n: int, connected: bool = True, min_n: int = 2) -> Tuple[Tuple[Graph, Bipartition], ...]:
    """Bipartite graphs with a + b vertices, a <= b, each with the bipartition A = 0..a-1."""
    hosts = []
    for total in range(min_n, max_n + 1):
        for a in range(1, total // 2 + 1):
            b = total - a
            parts = Bipartition([0] * a + [1] * b)
            hosts.extend((g, parts) for g in enumerate_bipartite(a, b, connected))
    return tuple(hosts)


def random_bipartite(rng: np.random.Generator) -> Graph:
    a, b = (int(x) for x in rng.integers(2, MAX_RANDOM_SIDE + 1, size=2))
    density = rng.uniform(0.3, 0.9)
    present = rng.random((a, b)) < density
    return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b) if present[i, j]])


@claim('equitable-knn', anchor="K_{n,n} can be equitably colored with k colors if and only if "
                               "ceil(n/floor(k/2)) - floor(n/ceil(k/2)) <= 1", module='bipartite', max_n=5, kmax=6)
def check_equitable_knn(params: dict, sweeper: Sweeper) -> ClaimTally:
    def check(item: Tuple[int, int], tally: ClaimTally):
        n, k = item
        tally.scanned()
        predicted = knn_condition(n, k)
        coloring = equitable_color(complete_bipartite(n, n), k)
        if predicted != (coloring is not None):
            tally.fail(f"n={n},k={k}", predicted=predicted, found=coloring is not None)
        else:
            tally.witness(f"n={n},k={k}", colourable=predicted)
    items = [(n, k) for n in range(1, params['max_n'] + 1) for k in range(2, params['kmax'] + 1)]
    return sweeper.sweep(items, check)


@claim('equitable-delta-coloring', anchor="if G is not isomorphic to any complete bipartite graph K_{n,n}, then G "
                                          "admits an equitable coloring using Delta(G) colors",
       module='bipartite', max_n=8)
def check_equitable_delta(params: dict, sweeper: Sweeper) -> ClaimTally:
    def check(host: Tuple[Graph, Bipartition], tally: ClaimTally):
        g, parts = host
        size_a, size_b = parts.sizes
        qualifies = not (size_a == size_b and g.m == size_a * size_b)
        tally.scanned(qualifies)
        if not qualifies:
            return
        coloring = equitable_color(g, g.max_degree)
        if coloring is None:
            tally.fail(key(g), colours=g.max_degree)
        else:
            tally.witness(key(g), colours=g.max_degree, sizes=coloring.sizes)
    return sweeper.sweep(bipartite_hosts(params['max_n']), check)


@claim('equitable-tree-bound', anchor="chi_e(T) <= ceil((|X| + |Y| + 1) / (min{|X|,|Y|} + 1))",
       module='bipartite', max_n=10)
def check_equitable_tree_bound(params: dict, sweeper: Sweeper) -> ClaimTally:
    def check(tree: Graph, tally: ClaimTally):
        tally.scanned()
        bound = tree_coloring_bound(bipartition(tree))
        chromatic = equitable_chromatic_number(tree)
        if chromatic > bound:
            tally.fail(key(tree), chromatic=chromatic, bound=bound)
        elif chromatic == bound:
            tally.witness(key(tree), chromatic=chromatic, bound=bound)
    trees = [tree for n in range(2, params['max_n'] + 1) for tree in all_trees(n)]
    return sweeper.sweep(trees, check)


@claim('equitable-sparse-bound', anchor="epsilon < floor(m/(n+1))(m - n) + 2m implies "
                                        "chi_e(G) <= ceil(m/(n+1)) + 1", module='bipartite', max_n=8)
def check_equitable_sparse_bound(params: dict, sweeper: Sweeper) -> ClaimTally:
    def check(host: Tuple[Graph, Bipartition], tally: ClaimTally):
        g, parts = host
        bound = sparse_coloring_bound(g, parts)
        tally.scanned(bound is not None)
        if bound is None:
            return
        chromatic = equitable_chromatic_number(g)
        if chromatic > bound:
            tally.fail(key(g), chromatic=chromatic, bound=bound, edges=g.m)
        elif chromatic == bound:
            tally.witness(key(g), chromatic=chromatic, bound=bound)
    return sweeper.sweep(bipartite_hosts(params['max_n']), check)


@claim('cycle-length-bound', anchor="G contains a cycle of length at least 2 min(|B|, k + l - 1, 2k - 2)",
       module='bipartite', max_n=8, samples=50, seed=7)
def check_cycle_length_bound(params: dict, sweeper: Sweeper) -> ClaimTally:
    def check(g: Graph, tally: ClaimTally):
        check_min_degree_bound(g, tally)
    rng = np.random.default_rng(params.get('seed'))
    graphs: List[Graph] = [g for g, _ in bipartite_hosts(params['max_n'])]
    graphs.extend(random_bipartite(rng) for _ in range(params.get('samples') or 0))
    return sweeper.sweep(graphs, check)


@claim('edge-count-bound', anchor="|E(G)| > b + (a-1)(m-1) if b <= 2m-2, (b + a - 2m + 3)(m-1) if b >= 2m-2",
       module='bipartite', max_n=8)
def check_edge_count(params: dict, sweeper: Sweeper) -> ClaimTally:
    def check(host: Tuple[Graph, Bipartition], tally: ClaimTally):
        g, parts = host
        check_edge_count_bound(g, parts, tally)
    tally = sweeper.sweep(bipartite_hosts(params['max_n'], connected=False), check)
    tally.note("read as: more edges than the bound force a cycle of length at least 2m")
    return tally


@claim('long-cycle-min-degree', anchor="each vertex in A has degree at least k >= 2; if |B| <= ceil(|A|/(k-1))(k-1) "
                                       "then G contains a cycle of length at least 2k", module='bipartite', max_n=8)
def check_long_cycle_min_degree(params: dict, sweeper: Sweeper) -> ClaimTally:
    def check(host: Tuple[Graph, Bipartition], tally: ClaimTally):
        g, parts = host
        # Largest k meeting the hypothesis in either orientation
        best = 0
        for part_a, part_b in ((parts.part_a, parts.part_b), (parts.part_b, parts.part_a)):
            low = min(g.degree(v) for v in part_a)
            for k in range(2, low + 1):
                if len(part_b) <= -(-len(part_a) // (k - 1)) * (k - 1):
                    best = max(best, k)
        tally.scanned(best > 0)
        if not best:
            return
        circumference = longest_cycle(g)
        if circumference < 2 * best:
            tally.fail(key(g), longest=circumference, required=2 * best)
        else:
            tally.witness(key(g), longest=circumference, required=2 * best)
    return sweeper.sweep(bipartite_hosts(params['max_n']), check)


@claim('b-spanning-path', anchor="if |B| < min(|A|, 2k-2), then for any two vertices of G, there exists a path "
                                 "containing all vertices of B that joins them", module='bipartite', max_n=9)
def check_b_spanning_path(params: dict, sweeper: Sweeper) -> ClaimTally:
    def check(host: Tuple[Graph, Bipartition], tally: ClaimTally):
        g, parts = host
        k = g.min_degree
        size_a, size_b = parts.sizes
        # The hosts list the smaller part first, so B is part A of the enumeration
        oriented = parts.swapped()
        qualifies = k >= 2 and size_a < min(size_b, 2 * k - 2)
        tally.scanned(qualifies)
        if not qualifies:
            return
        for u in range(g.n):
            for v in range(u + 1, g.n):
                if path_through_all_b(g, u, v, oriented) is None:
                    tally.fail(key(g), ends=(u, v), min_degree=k)
                    return
        tally.witness(key(g), min_degree=k, parts=(size_b, size_a))
    return sweeper.sweep(bipartite_hosts(params['max_n']), check)


@claim('redundant-tree-embedding', anchor="there exists an embedding phi: T -> G such that G - phi(T) remains "
                                          "k-connected and phi(Z_i) in U_i", module='bipartite',
       max_n=8, kmax=2, tree_n=4)
def check_redundant_tree_embedding(params: dict, sweeper: Sweeper) -> ClaimTally:
    trees = [(t, bipartition(t)) for size in range(2, params['tree_n'] + 1) for t in all_trees(size)]

    def check(host: Tuple[Graph, Bipartition], tally: ClaimTally):
        g, parts = host
        for k in range(1, params['kmax'] + 1):
            connected = is_k_connected(g, k)
            for t, t_parts in trees:
                for z in (t_parts, t_parts.swapped()):
                    z_sizes = z.sizes
                    qualifies = connected and all(
                        min(g.degree(u) for u in side) >= z_sizes[1 - i] + k
                        for i, side in enumerate((parts.part_a, parts.part_b)))
                    tally.scanned(qualifies)
                    if not qualifies:
                        continue
                    image = find_embedding(t, g, k, z, parts)
                    if image is None:
                        tally.fail(key(g), tree=key(t), redundancy=k)
                    else:
                        tally.witness(f"{key(g)}:{key(t)}:{k}", image=sorted(image.values()))
    tally = sweeper.sweep(bipartite_hosts(params['max_n']), check)
    tally.note(EMBEDDING_NOTE)
    return tally


@claim('unmixed-characterization', anchor="G is unmixed if and only if the edge {x_i,y_i} belongs to E(G) and "
                                          "{x_i,y_j}, {x_j,y_k} in E(G) force {x_i,y_k}",
       module='bipartite', max_side=4)
def check_unmixed(params: dict, sweeper: Sweeper) -> ClaimTally:
    def check(host: Tuple[Graph, Bipartition], tally: ClaimTally):
        g, parts = host
        qualifies = g.min_degree > 0
        tally.scanned(qualifies)
        if not qualifies:
            return
        structural = is_unmixed(g, parts)
        oracle = is_unmixed_by_covers(g)
        if structural != oracle:
            tally.fail(key(g), structural=structural, covers=oracle)
        elif structural:
            tally.witness(key(g), side=parts.sizes[0])
    hosts = []
    for side in range(1, params['max_side'] + 1):
        parts = Bipartition([0] * side + [1] * side)
        hosts.extend((g, parts) for g in enumerate_bipartite(side, side))
    return sweeper.sweep(hosts, check)


@claim('bihole-threshold', anchor="f(n, Delta) <= f*(n, Delta), with f(n, Delta) >= (1/2)(log Delta/Delta) n",
       module='bipartite', max_n=4, max_delta=3)
def check_bihole_threshold(params: dict, sweeper: Sweeper) -> ClaimTally:
    def check(item: Tuple[int, int], tally: ClaimTally):
        n, delta = item
        tally.scanned()
        one_sided = bihole_threshold(n, delta, ONE_SIDED)
        both_sides = bihole_threshold(n, delta, BOTH_SIDES)
        name = f"n={n},delta={delta}"
        if one_sided > both_sides or (delta == 0 and one_sided != n):
            tally.fail(name, one_sided=one_sided, both_sides=both_sides)
        else:
            tally.witness(name, one_sided=one_sided, both_sides=both_sides,
                          asymptotic=f"{asymptotic_bihole_bound(n, delta):.4f}")
    items = [(n, delta) for n in range(1, params['max_n'] + 1) for delta in range(0, params['max_delta'] + 1)]
    tally = sweeper.sweep(items, check)
    tally.note("the asymptotic bound is printed for context and not asserted")
    return tally
