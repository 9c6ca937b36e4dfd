"""
Checkers for the claims about trees: hyper-Zagreb bounds and reductions, multiplicative
KG-Sombor reductions, S-order structure and the forgotten index of dense graphs.
"""
import functools
from collections import OrderedDict
from itertools import combinations
from typing import Dict, List, Optional, Tuple

from graphbench_core.graph.canonical import canonical_code
from graphbench_core.graph.enumerate import enumerate_graphs
from graphbench_core.graph.graph import DegreeSequence, Graph, build_graph, degree_sequence, is_spider, is_tree
from graphbench_core.invariants.indices import (REAL_TOLERANCE, Ordering, exp_index_compare, forgotten_index,
                                                hm_lower_bounds, hyper_zagreb, mkg_log, mkg_lower_bound)
from graphbench_core.spectral.moments import (SOrder, closed_walks, compare_moments, count_p4, s_order_extremes,
                                              s_order_moments)
from graphbench_core.trees.construct import alternating_greedy, end_support_vertices, leaf_moves, spiders, \
    support_vertices
from graphbench_core.trees.enumerate import TreeClass, all_trees, enumerate_trees
from graphbench_core.trees.majorization import majorizes
from graphbench_core.verification.registry import claim
from graphbench_core.verification.report import ClaimTally
from graphbench_core.verification.sweep import Sweeper

MKG_TOLERANCE = 1e-9
CROSS_ORDER_NOTE = ("both trees are required to lie in one class T(n, delta) while n(T) > n(T') is also required; "
                    "no pair of trees satisfies both")
SHAPE_NOTE = "the named extremal graph is not defined; only uniqueness of the maximiser is checked"
F_EXCEPTIONS = {(6, 11), (7, 16), (7, 17), (8, 22)}


def key(g: Graph) -> str:
    return canonical_code(g).hex()


def _classes(params: dict, min_n: int = 4, min_delta: int = 3) -> List[TreeClass]:
    found = []
    for n in range(max(min_n, params.get('min_n', min_n)), params['max_n'] + 1):
        for delta in range(min_delta, n):
            if params.get('delta') is not None and delta != params['delta']:
                continue
            found.append(TreeClass.by_max_degree(n, delta))
    return found


@functools.lru_cache(maxsize=None)
def _class_members(n: int, delta: int) -> Tuple[Graph, ...]:
    return tuple(enumerate_trees(TreeClass.by_max_degree(n, delta)))


@functools.lru_cache(maxsize=None)
def trees_by_sequence(n: int) -> Dict[DegreeSequence, List[Graph]]:
    """All trees on n vertices grouped by degree sequence, sequences in decreasing order."""
    groups: Dict[DegreeSequence, List[Graph]] = {}
    for tree in all_trees(n):
        groups.setdefault(degree_sequence(tree), []).append(tree)
    return OrderedDict(sorted(groups.items(), key=lambda item: item[0].degrees, reverse=True))


def _hm(g: Graph) -> Tuple[int, int]:
    first, second = hyper_zagreb(g)
    return first.value, second.value


def _smaller_hm(target: Tuple[int, int], candidates) -> Optional[Graph]:
    for candidate in candidates:
        hm1, hm2 = _hm(candidate)
        if hm1 < target[0] and hm2 < target[1]:
            return candidate
    return None


def _has_other_hub(tree: Graph, delta: int, vertices) -> List[int]:
    """Vertices among `vertices` of degree >= 3 for which some other vertex has degree delta."""
    hubs = [v for v in range(tree.n) if tree.degree(v) == delta]
    return [v for v in vertices if tree.degree(v) >= 3 and any(rho != v for rho in hubs)]


@claim('spider-leg-reduction', anchor="a spider with at least two legs of length at least 2 has another spider with "
                                      "strictly smaller HM1 and HM2", module='trees', max_n=10)
def check_spider_leg_reduction(params: dict, sweeper: Sweeper) -> ClaimTally:
    def check(tree_class: TreeClass, tally: ClaimTally):
        family = spiders(tree_class.n, tree_class.delta)
        for tree in family:
            legs = is_spider(tree)
            qualifies = sum(1 for length in legs if length >= 2) >= 2
            tally.scanned(qualifies)
            if not qualifies:
                continue
            better = _smaller_hm(_hm(tree), family)
            if better is None:
                tally.fail(key(tree), legs=legs, hm=_hm(tree))
            else:
                tally.witness(key(tree), legs=legs, hm=_hm(tree), better_legs=is_spider(better), better_hm=_hm(better))
    return sweeper.sweep(_classes(params, min_n=5), check)


def _hm_bound_checker(position: int):
    def checker(params: dict, sweeper: Sweeper) -> ClaimTally:
        def check(tree_class: TreeClass, tally: ClaimTally):
            n, delta = tree_class.n, tree_class.delta
            bound = hm_lower_bounds(n, delta)[position]
            for tree in _class_members(n, delta):
                tally.scanned()
                value = _hm(tree)[position]
                legs = is_spider(tree)
                expected = delta == n - 1 or (legs is not None and sum(1 for length in legs if length >= 2) == 1)
                if value < bound:
                    tally.fail(key(tree), order=n, delta=delta, value=value, bound=bound)
                elif (value == bound) != expected:
                    tally.fail(key(tree), order=n, delta=delta, value=value, bound=bound, reason='equality case')
                elif value == bound:
                    tally.witness(key(tree), order=n, delta=delta, value=value, legs=legs or '')
        return sweeper.sweep(_classes(params), check)
    return checker


check_hm1_lower_bound = claim(
    'hm1-lower-bound', anchor="HM1(T) >= 16n + delta^3 + 2 delta^2 - 13 delta - 20, with equality if and only if T "
                              "is a spider having exactly one leg of length at least 2", module='trees', max_n=12
)(_hm_bound_checker(0))

check_hm2_lower_bound = claim(
    'hm2-lower-bound', anchor="HM2(T) >= 16n + delta^3 + 3 delta^2 - 16 delta - 28, with equality characterized "
                              "identically", module='trees', max_n=12
)(_hm_bound_checker(1))


def _support_checker(end_support: bool):
    def checker(params: dict, sweeper: Sweeper) -> ClaimTally:
        def check(tree_class: TreeClass, tally: ClaimTally):
            members = _class_members(tree_class.n, tree_class.delta)
            for tree in members:
                candidates = end_support_vertices(tree) if end_support else support_vertices(tree)
                offending = _has_other_hub(tree, tree_class.delta, candidates)
                tally.scanned(bool(offending))
                if not offending:
                    continue
                target = _hm(tree)
                local = None
                for support in offending:
                    moved = [t for t in leaf_moves(tree, support) if t.max_degree == tree_class.delta]
                    local = _smaller_hm(target, moved)
                    if local is not None:
                        break
                if local is not None:
                    tally.witness(key(tree), hm=target, move='local', better_hm=_hm(local))
                    continue
                better = _smaller_hm(target, members)
                if better is None:
                    tally.fail(key(tree), hm=target, supports=offending)
                else:
                    tally.witness(key(tree), hm=target, move='search', better_hm=_hm(better))
        return sweeper.sweep(_classes(params, min_n=5), check)
    return checker


check_end_support_reduction = claim(
    'end-support-reduction', anchor="an end-support vertex distinct from rho whose degree is at least three; it is "
                                    "possible to find another tree T' with HM1(T) > HM1(T') and HM2(T) > HM2(T')",
    module='trees', max_n=10
)(_support_checker(True))

check_support_vertex_reduction = claim(
    'support-vertex-reduction', anchor="a support vertex other than rho with degree at least three; there is another "
                                       "tree T' with HM1(T) > HM1(T') and HM2(T) > HM2(T')",
    module='trees', max_n=10
)(_support_checker(False))


@claim('cross-order-hyper-zagreb', anchor="T, T' in T(n, delta), l in V(T) having degree delta and rho in V(T') "
                                          "having degree n(T) - n(T'), where n(T) > n(T')", module='trees', max_n=10)
def check_cross_order(params: dict, sweeper: Sweeper) -> ClaimTally:
    def check(tree_class: TreeClass, tally: ClaimTally):
        count = len(_class_members(tree_class.n, tree_class.delta))
        # Every ordered pair of one class has n(T) == n(T')
        tally.universe += count * count
    tally = sweeper.sweep(_classes(params), check)
    tally.note(CROSS_ORDER_NOTE)
    return tally


@claim('exp-hyper-zagreb-reduction', anchor="a vertex different from rho whose degree is at least three; one can find "
                                            "T' with e^HM1(T) > e^HM1(T') and e^HM2(T) > e^HM2(T')",
       module='trees', max_n=10)
def check_exp_hyper_zagreb(params: dict, sweeper: Sweeper) -> ClaimTally:
    def check(tree_class: TreeClass, tally: ClaimTally):
        members = _class_members(tree_class.n, tree_class.delta)
        for tree in members:
            qualifies = bool(_has_other_hub(tree, tree_class.delta, range(tree.n)))
            tally.scanned(qualifies)
            if not qualifies:
                continue
            better = next((other for other in members
                           if exp_index_compare(tree, other, 'HM1') == Ordering.GREATER
                           and exp_index_compare(tree, other, 'HM2') == Ordering.GREATER), None)
            if better is None:
                tally.fail(key(tree), hm=_hm(tree))
            else:
                tally.witness(key(tree), hm=_hm(tree), better_hm=_hm(better))
    tally = sweeper.sweep(_classes(params, min_n=5), check)
    tally.note("exponentials are compared through their exact exponents")
    return tally


def _smaller_mkg(value: float, candidates) -> Optional[Graph]:
    for candidate in candidates:
        if mkg_log(candidate) < value - MKG_TOLERANCE * max(1.0, abs(value)):
            return candidate
    return None


def _mkg_branch_checker(params: dict, sweeper: Sweeper) -> ClaimTally:
    def check(tree_class: TreeClass, tally: ClaimTally):
        members = _class_members(tree_class.n, tree_class.delta)
        for tree in members:
            qualifies = bool(_has_other_hub(tree, tree_class.delta, range(tree.n)))
            tally.scanned(qualifies)
            if not qualifies:
                continue
            value = mkg_log(tree)
            better = _smaller_mkg(value, members)
            if better is None:
                tally.fail(key(tree), log_mkg=f"{value:.12g}")
            else:
                tally.witness(key(tree), log_mkg=f"{value:.12g}", better_log_mkg=f"{mkg_log(better):.12g}")
    tally = sweeper.sweep(_classes(params, min_n=5), check)
    tally.note("multiplicative values are compared as sums of logarithms")
    return tally


check_mkg_branch_reduction = claim(
    'mkg-branch-reduction', anchor="if T has a vertex of degree at least 3 except rho, then there exists a tree T' "
                                   "with MKG(T') < MKG(T)", module='trees', max_n=10
)(_mkg_branch_checker)

check_exp_mkg_branch_reduction = claim(
    'exp-mkg-branch-reduction', anchor="a vertex of degree at least 3 except rho; then there exists a tree T' with "
                                       "e^MKG(T') < e^MKG(T)", module='trees', max_n=10
)(_mkg_branch_checker)


@claim('mkg-starlike-reduction', anchor="a starlike tree with a leg of length 1 and another leg of length at least 3 "
                                        "has a starlike tree S' of the same order and legs with MKG(S) > MKG(S')",
       module='trees', max_n=10)
def check_mkg_starlike(params: dict, sweeper: Sweeper) -> ClaimTally:
    def check(tree_class: TreeClass, tally: ClaimTally):
        family = spiders(tree_class.n, tree_class.delta)
        for tree in family:
            legs = is_spider(tree)
            qualifies = min(legs) == 1 and max(legs) >= 3
            tally.scanned(qualifies)
            if not qualifies:
                continue
            value = mkg_log(tree)
            better = _smaller_mkg(value, family)
            if better is None:
                tally.fail(key(tree), legs=legs, log_mkg=f"{value:.12g}")
            else:
                tally.witness(key(tree), legs=legs, better_legs=is_spider(better))
    return sweeper.sweep(_classes(params, min_n=5), check)


@claim('mkg-lower-bound', anchor="MKG(G) >= (sqrt(delta^2+4) + sqrt(2) delta)^delta (sqrt(5)+sqrt(2))^delta "
                                 "(4 sqrt(2))^(n-2delta-1) when delta <= (n-1)/2", module='trees',
       max_n=10, graphs_max_n=7)
def check_mkg_lower_bound(params: dict, sweeper: Sweeper) -> ClaimTally:
    items = []
    for n in range(3, params['max_n'] + 1):
        for delta in range(2, n):
            if mkg_lower_bound(n, delta) is not None:
                items.extend(_class_members(n, delta))
    for n in range(3, min(params['graphs_max_n'], 8) + 1):
        items.extend(g for g in enumerate_graphs(n, connected=True)
                     if not is_tree(g) and mkg_lower_bound(n, g.max_degree) is not None)

    def check(g: Graph, tally: ClaimTally):
        tally.scanned()
        bound = mkg_lower_bound(g.n, g.max_degree)
        value = mkg_log(g)
        slack = REAL_TOLERANCE * max(1.0, abs(bound))
        if value < bound - slack:
            tally.fail(key(g), order=g.n, delta=g.max_degree, log_mkg=f"{value:.12g}", log_bound=f"{bound:.12g}")
        elif value <= bound + slack:
            tally.witness(key(g), order=g.n, delta=g.max_degree, legs=is_spider(g) or '')
    return sweeper.sweep(items, check)


def _internal(degrees: DegreeSequence) -> Tuple[int, ...]:
    return tuple(d for d in degrees if d >= 2)


@claim('alternating-greedy-first', anchor="among trees with a fixed degree sequence where all degrees are distinct, "
                                          "the first tree in the S-order is necessarily an alternating greedy tree",
       module='trees', max_n=12)
def check_alternating_greedy_first(params: dict, sweeper: Sweeper) -> ClaimTally:
    items = [(degrees, trees) for n in range(3, params['max_n'] + 1)
             for degrees, trees in trees_by_sequence(n).items()]

    def check(item, tally: ClaimTally):
        degrees, trees = item
        internal = _internal(degrees)
        qualifies = len(set(internal)) == len(internal)
        tally.scanned(qualifies)
        if not qualifies:
            return
        greedy = key(alternating_greedy(internal))
        first, _ = s_order_extremes(trees)
        codes = [key(tree) for tree in first]
        label = ','.join(str(d) for d in degrees)
        if greedy in codes:
            tally.witness(label, greedy=greedy, p4_count=count_p4(first[0]))
        else:
            tally.fail(label, greedy=greedy, first=codes)
    tally = sweeper.sweep(items, check)
    tally.note("degrees are read as the internal (non-leaf) degrees; leaves always repeat")
    return tally


@claim('majorization-last-order', anchor="if D is majorized by D', the last trees satisfy T* precedes (T')* in the "
                                         "S-order", module='trees', max_n=9)
def check_majorization_last_order(params: dict, sweeper: Sweeper) -> ClaimTally:
    items = []
    for n in range(4, params['max_n'] + 1):
        groups = trees_by_sequence(n)
        lasts = {degrees: s_order_extremes(trees)[1][0] for degrees, trees in groups.items()}
        for lower, upper in combinations(groups, 2):
            items.append((lower, upper, lasts))

    def check(item, tally: ClaimTally):
        first, second, lasts = item
        pair = None
        if majorizes(first, second):
            pair = (second, first)
        elif majorizes(second, first):
            pair = (first, second)
        tally.scanned(pair is not None)
        if pair is None:
            return
        lower, upper = pair
        label = ','.join(map(str, lower)) + '<' + ','.join(map(str, upper))
        order = compare_moments(s_order_moments(lasts[lower]), s_order_moments(lasts[upper]))
        if order != SOrder.PRECEDES:
            tally.fail(label, order=order.value)
        else:
            tally.witness(label, lower_last=key(lasts[lower]), upper_last=key(lasts[upper]))
    return sweeper.sweep(items, check)


@claim('p4-sixth-moment', anchor="S_k(T) remains constant for k=0..5 and S_6(T1) - S_6(T2) = 6(phi_T1(P4) - "
                                 "phi_T2(P4))", module='trees', max_n=10)
def check_p4_sixth_moment(params: dict, sweeper: Sweeper) -> ClaimTally:
    items = [trees for n in range(4, params['max_n'] + 1) for trees in trees_by_sequence(n).values()]

    def check(trees: List[Graph], tally: ClaimTally):
        reference = trees[0]
        reference_walks, reference_p4 = closed_walks(reference, 6), count_p4(reference)
        for tree in trees[1:]:
            tally.scanned()
            walks, p4 = closed_walks(tree, 6), count_p4(tree)
            if walks[:6] != reference_walks[:6] or walks[6] - reference_walks[6] != 6 * (p4 - reference_p4):
                tally.fail(key(tree), reference=key(reference), moments=walks, p4_count=p4)
    return sweeper.sweep(items, check)


def _depths(tree: Graph, root: int) -> List[int]:
    depth = [-1] * tree.n
    depth[root] = 0
    stack = [root]
    while stack:
        v = stack.pop()
        for w in tree.neighbours(v):
            if depth[w] < 0:
                depth[w] = depth[v] + 1
                stack.append(w)
    return depth


@claim('degree-swap-order', anchor="if T' is obtained by swapping edges ux0, vx1 with ux1, vx0 and d(x0) < d(x1), "
                                   "then T precedes T' in the S-order", module='trees', max_n=9)
def check_degree_swap(params: dict, sweeper: Sweeper) -> ClaimTally:
    items = [tree for n in range(4, params['max_n'] + 1) for tree in all_trees(n)]

    def check(tree: Graph, tally: ClaimTally):
        root = max(range(tree.n), key=lambda v: (tree.degree(v), -v))
        depth = _depths(tree, root)
        weight = [sum(tree.degree(w) for w in tree.neighbours(v)) for v in range(tree.n)]
        for u in range(tree.n):
            for v in range(tree.n):
                if u == v or tree.degree(u) != tree.degree(v) or weight[u] < weight[v]:
                    continue
                u_children = [x for x in tree.neighbours(u) if depth[x] == depth[u] + 1]
                v_children = [x for x in tree.neighbours(v) if depth[x] == depth[v] + 1]
                if not u_children or not v_children:
                    continue
                x0 = min(u_children, key=lambda x: (tree.degree(x), x))
                x1 = max(v_children, key=lambda x: (tree.degree(x), -x))
                if tree.degree(x0) >= tree.degree(x1) or x0 == v or x1 == u:
                    continue
                edges = [e for e in tree.edges() if set(e) not in ({u, x0}, {v, x1})]
                swapped = build_graph(tree.n, edges + [(u, x1), (v, x0)])
                qualifies = is_tree(swapped)
                tally.scanned(qualifies)
                if not qualifies:
                    continue
                order = compare_moments(s_order_moments(tree), s_order_moments(swapped))
                if order != SOrder.PRECEDES:
                    tally.fail(f"{key(tree)}:{u}-{v}", swapped=key(swapped), order=order.value)
    return sweeper.sweep(items, check)


def f_bound_parameters(n: int, m: int):
    """(k, a) with m = nk - C(k+1, 2) + a, 1 <= k <= n-1 and 0 <= a < n-k-1, or None."""
    for k in range(1, n):
        a = m - (n * k - k * (k + 1) // 2)
        if 0 <= a < n - k - 1:
            return k, a
    return None


def f_upper_bound(n: int, k: int, a: int) -> int:
    return k * (n - 1) ** 3 + a * (k + 1) ** 3 + (n - k - a - 1) * k ** 3 + (k + a) ** 3


def _connected_graphs(params: dict, min_n: int) -> List[Graph]:
    return [g for n in range(min_n, params['max_n'] + 1) for g in enumerate_graphs(n, connected=True)]


@claim('f-index-upper-bound', anchor="F(G) <= k(n-1)^3 + a(k+1)^3 + (n-k-a-1)k^3 + (k+a)^3", module='graph',
       max_n=8)
def check_f_index_upper_bound(params: dict, sweeper: Sweeper) -> ClaimTally:
    def check(g: Graph, tally: ClaimTally):
        parameters = f_bound_parameters(g.n, g.m)
        tally.scanned(parameters is not None)
        if parameters is None:
            return
        k, a = parameters
        bound = f_upper_bound(g.n, k, a)
        value = forgotten_index(g).value
        if value > bound:
            tally.fail(key(g), order=g.n, edges=g.m, value=value, bound=bound)
        elif value == bound:
            tally.witness(key(g), order=g.n, edges=g.m, value=value)
    return sweeper.sweep(_connected_graphs(params, 6), check)


def _f_maximisers(n: int, m: int) -> List[Graph]:
    graphs = [g for g in enumerate_graphs(n, connected=True) if g.m == m]
    if not graphs:
        return []
    best = max(forgotten_index(g).value for g in graphs)
    return [g for g in graphs if forgotten_index(g).value == best]


def _density_items(params: dict, low, high) -> List[Tuple[int, int]]:
    return [(n, m) for n in range(6, params['max_n'] + 1) for m in range(low(n) + 1, high(n) + 1)]


def _uniqueness_checker(low, high):
    def checker(params: dict, sweeper: Sweeper) -> ClaimTally:
        def check(item, tally: ClaimTally):
            n, m = item
            maximisers = _f_maximisers(n, m)
            label = f"n={n},m={m}"
            qualifies = bool(maximisers) and item not in F_EXCEPTIONS
            tally.scanned(qualifies)
            sequences = ['/'.join(map(str, degree_sequence(g))) for g in maximisers]
            if item in F_EXCEPTIONS:
                tally.witness(label, exception='yes', degrees=sequences)
            elif not qualifies:
                return
            elif len(maximisers) > 1:
                tally.fail(label, degrees=sequences)
            else:
                tally.witness(label, degrees=sequences[0], value=forgotten_index(maximisers[0]).value)
        tally = sweeper.sweep(_density_items(params, low, high), check)
        tally.note(SHAPE_NOTE)
        return tally
    return checker


check_max_f_mid_density = claim(
    'max-f-mid-density', anchor="2n-3 < m <= 3n-6: G has maximum F-index, then G = S_{n,m} except when "
                                "(n,m) = (6,11)", module='graph', max_n=7
)(_uniqueness_checker(lambda n: 2 * n - 3, lambda n: 3 * n - 6))

check_max_f_high_density = claim(
    'max-f-high-density', anchor="3n-6 < m <= 4n-10: G = S_{n,m} except for (n,m) in {(7,16), (7,17), (8,22)}",
    module='graph', max_n=7
)(_uniqueness_checker(lambda n: 3 * n - 6, lambda n: 4 * n - 10))


def low_density_shape(degrees: DegreeSequence) -> bool:
    """(n-1, d2, ..., d2, 1, 1)."""
    n = len(degrees)
    middle = degrees[1:n - 2]
    return (degrees[0] == n - 1 and tuple(degrees[n - 2:]) == (1, 1)
            and len(set(middle)) <= 1)


@claim('max-f-low-density-shape', anchor="n-1 < m <= 2n-3: the maximum F-index graph features degree sequence "
                                         "(n-1, d2, ..., d2, 1, 1)", module='graph', max_n=7)
def check_max_f_low_density(params: dict, sweeper: Sweeper) -> ClaimTally:
    def check(item, tally: ClaimTally):
        n, m = item
        label = f"n={n},m={m}"
        for g in _f_maximisers(n, m):
            tally.scanned()
            degrees = degree_sequence(g)
            if low_density_shape(degrees):
                tally.witness(f"{label}:{key(g)}", degrees='/'.join(map(str, degrees)))
            else:
                tally.fail(f"{label}:{key(g)}", degrees='/'.join(map(str, degrees)))
    return sweeper.sweep(_density_items(params, lambda n: n - 1, lambda n: 2 * n - 3), check)
