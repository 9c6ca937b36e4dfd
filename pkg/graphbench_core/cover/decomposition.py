"""
Canonical decomposition of a relation K in S x T.

With a maximum matching fixed, W holds everything reachable by alternating paths from the
unmatched elements of T and Z everything reachable from the unmatched elements of S.  The
extremal minimal pairs are [A_*, B^*] = [S & W, T - W] and [A^*, B_*] = [S - Z, T & Z].  The
rest is the core: it is perfectly matched, and orienting s -> t along edges and t -> s along
matched edges splits it into strongly connected fine blocks S_i x T_i.

S and T are cut into groups A_*, S_1, ..., S_k, S - A^* and T - B^*, T_1, ..., T_k, B_*.
Region R1 is the diagonal of that grid, R2 lies above it and R3 below; K never meets R3.
"""
from collections import deque
from typing import Dict, List, Tuple

import networkx as nx

from graphbench_core.cover.meps import _check_meps_size, maximum_matching
from graphbench_core.cover.relation import ExteriorPair, RelationGraph
from graphbench_core.graph.graph import bits

ADMISSIBLE = 1
INADMISSIBLE = 2
EMPTY = 3


class CanonicalDecomposition:
    def __init__(self, k: RelationGraph, lower: ExteriorPair, upper: ExteriorPair, blocks: List[Tuple[int, int]]):
        self.k = k
        self.lower = lower          # [A_*, B^*]
        self.upper = upper          # [A^*, B_*]
        self.blocks = blocks        # (S_i, T_i) masks in topological order

    @property
    def s_groups(self) -> List[int]:
        return [self.lower.a] + [s for s, _ in self.blocks] + [self.k.full_s & ~self.upper.a]

    @property
    def t_groups(self) -> List[int]:
        return [self.k.full_t & ~self.lower.b] + [t for _, t in self.blocks] + [self.upper.b]

    def _group_index(self) -> Tuple[Dict[int, int], Dict[int, int]]:
        s_index = {s: i for i, mask in enumerate(self.s_groups) for s in bits(mask)}
        t_index = {t: i for i, mask in enumerate(self.t_groups) for t in bits(mask)}
        return s_index, t_index

    def region(self, s: int, t: int) -> int:
        s_index, t_index = self._group_index()
        return self._region(s_index[s], t_index[t])

    @staticmethod
    def _region(i: int, j: int) -> int:
        if i == j:
            return ADMISSIBLE
        return INADMISSIBLE if i < j else EMPTY

    def classify_edges(self) -> Dict[int, List[Tuple[int, int]]]:
        s_index, t_index = self._group_index()
        classes = {ADMISSIBLE: [], INADMISSIBLE: [], EMPTY: []}
        for s, t in self.k.edges():
            classes[self._region(s_index[s], t_index[t])].append((s, t))
        return classes

    def chain(self) -> List[ExteriorPair]:
        """The k + 1 minimal pairs A_* + S_1 + .. + S_i, B_* + T_{i+1} + .. + T_k."""
        pairs = []
        for i in range(len(self.blocks) + 1):
            a = self.lower.a
            b = self.upper.b
            for index, (s_mask, t_mask) in enumerate(self.blocks):
                if index < i:
                    a |= s_mask
                else:
                    b |= t_mask
            pairs.append(ExteriorPair(a, b))
        return pairs

    def lattice(self) -> List[ExteriorPair]:
        """All 2^k pairs taking either S_i or T_i from every block."""
        pairs = []
        for choice in range(1 << len(self.blocks)):
            a, b = self.lower.a, self.upper.b
            for index, (s_mask, t_mask) in enumerate(self.blocks):
                if choice >> index & 1:
                    a |= s_mask
                else:
                    b |= t_mask
            pairs.append(ExteriorPair(a, b))
        return sorted(pairs)

    def block_relations(self) -> List[RelationGraph]:
        return [self.k.restrict(s_mask, t_mask) for s_mask, t_mask in self.blocks]


def _alternating_reach(k: RelationGraph, mate_s: Dict[int, int], from_s: bool) -> Tuple[int, int]:
    """(S mask, T mask) reachable by alternating paths from the unmatched elements of one side."""
    mate_t = {t: s for s, t in mate_s.items()}
    columns = [0] * k.q
    for s, t in k.edges():
        columns[t] |= 1 << s
    reach_s = reach_t = 0
    queue = deque()
    if from_s:
        for s in range(k.p):
            if s not in mate_s:
                reach_s |= 1 << s
                queue.append(('s', s))
    else:
        for t in range(k.q):
            if t not in mate_t:
                reach_t |= 1 << t
                queue.append(('t', t))
    while queue:
        side, v = queue.popleft()
        if side == 's':
            # Unmatched edges lead to T, matched ones back to S
            for t in bits(k.rows[v] & ~reach_t):
                if mate_s.get(v) == t:
                    continue
                reach_t |= 1 << t
                if t in mate_t and not reach_s >> mate_t[t] & 1:
                    reach_s |= 1 << mate_t[t]
                    queue.append(('s', mate_t[t]))
        else:
            for s in bits(columns[v] & ~reach_s):
                if mate_t.get(v) == s:
                    continue
                reach_s |= 1 << s
                if s in mate_s and not reach_t >> mate_s[s] & 1:
                    reach_t |= 1 << mate_s[s]
                    queue.append(('t', mate_s[s]))
    return reach_s, reach_t


def canonical_decomposition(k: RelationGraph) -> CanonicalDecomposition:
    _check_meps_size(k)
    mate_s = maximum_matching(k)
    z_s, z_t = _alternating_reach(k, mate_s, from_s=True)
    w_s, w_t = _alternating_reach(k, mate_s, from_s=False)
    lower = ExteriorPair(w_s, k.full_t & ~w_t)
    upper = ExteriorPair(k.full_s & ~z_s, z_t)

    core_s = k.full_s & ~z_s & ~w_s
    core_t = k.full_t & ~z_t & ~w_t
    digraph = nx.DiGraph()
    digraph.add_nodes_from(('s', s) for s in bits(core_s))
    digraph.add_nodes_from(('t', t) for t in bits(core_t))
    for s in bits(core_s):
        digraph.add_edges_from((('s', s), ('t', t)) for t in bits(k.rows[s] & core_t))
        digraph.add_edge(('t', mate_s[s]), ('s', s))

    condensed = nx.condensation(digraph)
    members = condensed.graph['mapping']
    component_nodes: Dict[int, list] = {}
    for node, component in members.items():
        component_nodes.setdefault(component, []).append(node)
    order = nx.lexicographical_topological_sort(condensed, key=lambda c: min(component_nodes[c]))
    blocks = []
    for component in order:
        nodes = component_nodes[component]
        blocks.append((sum(1 << i for side, i in nodes if side == 's'),
                       sum(1 << j for side, j in nodes if side == 't')))
    return CanonicalDecomposition(k, lower, upper, blocks)
