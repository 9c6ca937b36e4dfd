"""
Spectral moments, the Estrada index and the S-order.

Moments are exact closed-walk counts, S_k = trace(A^k), never derived from eigenvalues, so
ties in the S-order are decided exactly.  Graphs of order n are compared on S_0..S_n; with
S_n included two graphs are S-equal exactly when they are cospectral.
"""
import enum
import logging
import math
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from graphbench_core.errors import NumericError, PreconditionError
from graphbench_core.graph.canonical import canonical_code
from graphbench_core.graph.graph import Graph, bits
from graphbench_core.invariants.indices import REAL, IndexValue

log = logging.getLogger('graphbench.spectral')

ESTRADA_TOLERANCE = 1e-8
SERIES_TOLERANCE = 1e-6
SERIES_TRUNCATION = 1e-9


class MomentVector:
    __slots__ = ('n', 'moments')

    def __init__(self, n: int, moments: Sequence[int]):
        self.n = n
        self.moments = tuple(moments)

    def __getitem__(self, k):
        return self.moments[k]

    def __len__(self):
        return len(self.moments)

    def __eq__(self, other):
        return isinstance(other, MomentVector) and self.n == other.n and self.moments == other.moments

    def __hash__(self):
        return hash((self.n, self.moments))

    def __repr__(self):
        return f"MomentVector(n={self.n}, moments={self.moments})"


class SOrder(enum.Enum):
    EQUAL_S = 'equal_s'
    PRECEDES = 'precedes'
    SUCCEEDS = 'succeeds'


def closed_walks(g: Graph, kmax: int) -> List[int]:
    """trace(A^k) for k = 0..kmax in big-integer arithmetic."""
    n = g.n
    neighbours = [list(bits(row)) for row in g.rows]
    power = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    traces = [n]
    for _ in range(kmax):
        power = [[sum(row[w] for w in neighbours[j]) for j in range(n)] for row in power]
        traces.append(sum(power[i][i] for i in range(n)))
    return traces


def spectral_moments(g: Graph, kmax: int) -> MomentVector:
    if kmax < 0 or kmax > 2 * g.n:
        raise PreconditionError(f"kmax must lie in 0..{2 * g.n} for a graph on {g.n} vertices, got {kmax}")
    return MomentVector(g.n, closed_walks(g, kmax))


def s_order_moments(g: Graph) -> MomentVector:
    return MomentVector(g.n, closed_walks(g, g.n))


def _series_terms(n: int, delta: int) -> int:
    k = 0
    while n * delta ** k / math.factorial(k) >= SERIES_TRUNCATION:
        k += 1
    return k


def estrada(g: Graph) -> IndexValue:
    """Sum of exp(eigenvalue), cross-checked against the closed-walk series."""
    try:
        eigenvalues = np.linalg.eigvalsh(g.adjacency_matrix())
    except np.linalg.LinAlgError as error:
        raise NumericError(f"Eigenvalue computation did not converge: {error}")
    value = math.fsum(math.exp(x) for x in eigenvalues)

    walks = closed_walks(g, _series_terms(g.n, g.max_degree))
    series = math.fsum(count / math.factorial(k) for k, count in enumerate(walks))
    if abs(series - value) > SERIES_TOLERANCE * max(1.0, value):
        raise NumericError(f"Estrada index {value} disagrees with its walk series {series}")
    log.debug(f"Estrada index {value} (series {series}, {len(walks)} terms)")
    return IndexValue(REAL, value, ESTRADA_TOLERANCE, '')


def first_divergence(left: MomentVector, right: MomentVector) -> Optional[int]:
    for k, (a, b) in enumerate(zip(left.moments, right.moments)):
        if a != b:
            return k
    return None


def compare_moments(left: MomentVector, right: MomentVector) -> SOrder:
    k = first_divergence(left, right)
    if k is None:
        return SOrder.EQUAL_S
    return SOrder.PRECEDES if left[k] < right[k] else SOrder.SUCCEEDS


def s_order_compare(g1: Graph, g2: Graph) -> SOrder:
    if g1.n != g2.n:
        raise PreconditionError(f"S-order compares graphs of equal order, got {g1.n} and {g2.n}")
    return compare_moments(s_order_moments(g1), s_order_moments(g2))


def count_triangles(g: Graph) -> int:
    return sum(bin(g.rows[u] & g.rows[v]).count('1') for u, v in g.edges()) // 3


def count_p4(g: Graph) -> int:
    """Paths on four distinct vertices, each counted once."""
    degree = g.degrees()
    middles = sum((degree[u] - 1) * (degree[v] - 1) for u, v in g.edges())
    return middles - 3 * count_triangles(g)


def _ranked(graphs: Iterable[Graph]) -> List[Tuple[Tuple[int, ...], bytes, Graph]]:
    return sorted(((s_order_moments(g).moments, canonical_code(g), g) for g in graphs), key=lambda x: x[:2])


def s_order_extremes(graphs: Iterable[Graph]) -> Tuple[List[Graph], List[Graph]]:
    """The S-equal classes at the bottom and top of the S-order, each sorted by canonical code."""
    ranked = _ranked(graphs)
    if not ranked:
        return [], []
    lowest, highest = ranked[0][0], ranked[-1][0]
    return ([g for moments, _, g in ranked if moments == lowest],
            [g for moments, _, g in ranked if moments == highest])


def first_in_s_order(graphs: Iterable[Graph]) -> Optional[Graph]:
    ranked = _ranked(graphs)
    return ranked[0][2] if ranked else None


def last_in_s_order(graphs: Iterable[Graph]) -> Optional[Graph]:
    ranked = _ranked(graphs)
    return ranked[-1][2] if ranked else None
