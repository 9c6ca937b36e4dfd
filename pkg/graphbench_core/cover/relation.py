"""
Relations K in S x T, stored as one bit mask over T per element of S.
"""
import json
from typing import Iterable, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from graphbench_core.errors import GraphValidationError
from graphbench_core.graph.codec import parse_matrix_rows
from graphbench_core.graph.graph import bits

MAX_RELATION_SIDE = 40


def popcount(mask: int) -> int:
    return bin(mask).count('1')


class RelationGraph:
    __slots__ = ('p', 'q', 'rows')

    def __init__(self, p: int, q: int, rows: Sequence[int]):
        if p < 1 or q < 1:
            raise GraphValidationError(f"Both sides need at least one element, got p={p}, q={q}")
        if len(rows) != p or any(row >> q for row in rows):
            raise GraphValidationError(f"Rows do not describe a {p}x{q} relation")
        self.p = p
        self.q = q
        self.rows = tuple(rows)

    @classmethod
    def from_edges(cls, p: int, q: int, edges: Iterable[Tuple[int, int]]) -> 'RelationGraph':
        rows = [0] * p
        for s, t in edges:
            if not (0 <= s < p and 0 <= t < q):
                raise GraphValidationError(f"Pair ({s}, {t}) lies outside {p}x{q}")
            rows[s] |= 1 << t
        return cls(p, q, rows)

    @classmethod
    def from_matrix(cls, matrix) -> 'RelationGraph':
        matrix = np.asarray(matrix, dtype=bool)
        if matrix.ndim != 2:
            raise GraphValidationError("A relation matrix must be two dimensional")
        p, q = matrix.shape
        return cls(p, q, [sum(1 << int(t) for t in np.flatnonzero(row)) for row in matrix])

    def __eq__(self, other):
        return isinstance(other, RelationGraph) and (self.p, self.q, self.rows) == (other.p, other.q, other.rows)

    def __hash__(self):
        return hash((self.p, self.q, self.rows))

    def __repr__(self):
        return f"RelationGraph(p={self.p}, q={self.q}, edges={self.edges()})"

    @property
    def full_s(self) -> int:
        return (1 << self.p) - 1

    @property
    def full_t(self) -> int:
        return (1 << self.q) - 1

    @property
    def size(self) -> int:
        return sum(popcount(row) for row in self.rows)

    def has(self, s: int, t: int) -> bool:
        return bool(self.rows[s] >> t & 1)

    def edges(self) -> List[Tuple[int, int]]:
        return [(s, t) for s, row in enumerate(self.rows) for t in bits(row)]

    def matrix(self) -> np.ndarray:
        out = np.zeros((self.p, self.q), dtype=bool)
        for s, t in self.edges():
            out[s, t] = True
        return out

    def key(self) -> str:
        return f"{self.p}x{self.q}:" + ''.join(format(row, f'0{self.q}b')[::-1] for row in self.rows)

    def transpose(self) -> 'RelationGraph':
        return RelationGraph.from_edges(self.q, self.p, ((t, s) for s, t in self.edges()))

    def complement(self) -> 'RelationGraph':
        return RelationGraph(self.p, self.q, [self.full_t & ~row for row in self.rows])

    def restrict(self, s_mask: int, t_mask: int) -> 'RelationGraph':
        """K on the chosen elements only, both sides relabelled in increasing order."""
        s_list, t_list = list(bits(s_mask)), list(bits(t_mask))
        position = {t: index for index, t in enumerate(t_list)}
        rows = [sum(1 << position[t] for t in bits(self.rows[s] & t_mask)) for s in s_list]
        return RelationGraph(len(s_list), len(t_list), rows)

    def neighbourhood(self, s_mask: int) -> int:
        out = 0
        for s in bits(s_mask):
            out |= self.rows[s]
        return out

    def to_networkx(self) -> nx.Graph:
        """Bipartite graph with nodes ('s', i) and ('t', j)."""
        graph = nx.Graph()
        graph.add_nodes_from(('s', s) for s in range(self.p))
        graph.add_nodes_from(('t', t) for t in range(self.q))
        graph.add_edges_from((('s', s), ('t', t)) for s, t in self.edges())
        return graph


class ExteriorPair:
    """[A, B] with A in S and B in T, both as bit masks."""
    __slots__ = ('a', 'b')

    def __init__(self, a: int, b: int):
        self.a = a
        self.b = b

    @property
    def weight(self) -> int:
        return popcount(self.a) + popcount(self.b)

    def covers(self, k: RelationGraph) -> bool:
        return all(self.a >> s & 1 or not row & ~self.b for s, row in enumerate(k.rows))

    def transposed(self) -> 'ExteriorPair':
        return ExteriorPair(self.b, self.a)

    def as_lists(self) -> Tuple[List[int], List[int]]:
        return list(bits(self.a)), list(bits(self.b))

    def __eq__(self, other):
        return isinstance(other, ExteriorPair) and (self.a, self.b) == (other.a, other.b)

    def __lt__(self, other):
        return (self.a, self.b) < (other.a, other.b)

    def __hash__(self):
        return hash((self.a, self.b))

    def __repr__(self):
        a, b = self.as_lists()
        return f"ExteriorPair(A={a}, B={b})"


def parse_relation(text: str) -> RelationGraph:
    """Rows of 0/1 characters, or JSON {"p": .., "q": .., "edges": [[s, t], ...]}."""
    stripped = text.strip()
    if stripped.startswith('{'):
        try:
            data = json.loads(stripped)
            return RelationGraph.from_edges(int(data['p']), int(data['q']), [tuple(edge) for edge in data['edges']])
        except (json.JSONDecodeError, KeyError, TypeError, ValueError) as error:
            if isinstance(error, GraphValidationError):
                raise
            raise GraphValidationError(f"Malformed JSON relation: {error}")
    rows = parse_matrix_rows(stripped)
    if len(rows) > MAX_RELATION_SIDE or len(rows[0]) > MAX_RELATION_SIDE:
        raise GraphValidationError(f"Relations are limited to {MAX_RELATION_SIDE} elements per side")
    return RelationGraph.from_matrix([[c == '1' for c in row] for row in rows])


def read_relation_file(path: str) -> RelationGraph:
    try:
        with open(path) as relation_file:
            return parse_relation(relation_file.read())
    except OSError as error:
        raise GraphValidationError(f"Could not read relation file {path}: {error}")


def to_matrix_text(k: RelationGraph) -> str:
    return '\n'.join(''.join('1' if k.has(s, t) else '0' for t in range(k.q)) for s in range(k.p))


def random_relation(p: int, q: int, rng: np.random.Generator,
                    density: Optional[float] = None) -> RelationGraph:
    density = rng.uniform(0.1, 0.9) if density is None else density
    return RelationGraph.from_matrix(rng.random((p, q)) < density)
