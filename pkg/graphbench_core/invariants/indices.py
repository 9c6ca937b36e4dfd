"""
Degree-based topological indices.

Integer-valued indices are computed exactly.  Real indices carry an absolute tolerance, and
products or exponentials of indices are carried as natural logarithms (kind 'log-real').
"""
import enum
import math
from collections import namedtuple
from typing import Optional, Tuple

from graphbench_core.errors import DomainError, UndefinedIndexError
from graphbench_core.graph.graph import Graph

EXACT = 'exact'
REAL = 'real'
LOG_REAL = 'log-real'
UNDEFINED = 'undefined'
REAL_TOLERANCE = 1e-9

SOMBOR_INDICES = ('SO', 'KG', 'MKG')

MKG_NOTE = ("the third degree in each multiplicative factor is read as the edge degree "
            "d(e) = d(u) + d(v) - 2; the printed formula leaves it unbound")
KG_NOTE = "evaluated over vertex-edge incidences with edge degree d(e) = d(u) + d(v) - 2"
KG_LITERAL_NOTE = "literal printed form, identical to the Sombor index"

IndexValue = namedtuple('IndexValue', ['kind', 'value', 'tolerance', 'note'])


def exact(value: int, note: str = '') -> IndexValue:
    return IndexValue(EXACT, value, 0, note)


def real(value: float, note: str = '') -> IndexValue:
    return IndexValue(REAL, value, REAL_TOLERANCE, note)


def log_real(value: float, note: str = '') -> IndexValue:
    return IndexValue(LOG_REAL, value, REAL_TOLERANCE, note)


class Ordering(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1

    @classmethod
    def of(cls, left, right) -> 'Ordering':
        return cls((left > right) - (left < right))


def general_zagreb(g: Graph, alpha: float) -> IndexValue:
    """Sum of deg(v)**alpha; exact for non-negative integer alpha."""
    if float(alpha).is_integer() and alpha >= 0:
        power = int(alpha)
        return exact(sum(d ** power for d in g.degrees()))
    terms = []
    for v, d in enumerate(g.degrees()):
        if d == 0:
            if alpha < 0:
                raise DomainError(f"Vertex {v} is isolated; 0 cannot be raised to the power {alpha}", vertex=v)
            terms.append(0.0)
        else:
            terms.append(d ** alpha)
    return real(math.fsum(terms))


def forgotten_index(g: Graph) -> IndexValue:
    return general_zagreb(g, 3)


def hyper_zagreb(g: Graph) -> Tuple[IndexValue, IndexValue]:
    degree = g.degrees()
    hm1 = hm2 = 0
    for u, v in g.edges():
        hm1 += (degree[u] + degree[v]) ** 2
        hm2 += (degree[u] * degree[v]) ** 2
    return exact(hm1), exact(hm2)


def hm1(g: Graph) -> int:
    return hyper_zagreb(g)[0].value


def hm2(g: Graph) -> int:
    return hyper_zagreb(g)[1].value


def hm_lower_bounds(n: int, delta: int) -> Tuple[int, int]:
    """Smallest first and second hyper-Zagreb values over trees with n vertices and maximum degree delta."""
    if delta == n - 1:
        return delta * (delta + 1) ** 2, delta ** 3
    return (16 * n + delta ** 3 + 2 * delta ** 2 - 13 * delta - 20,
            16 * n + delta ** 3 + 3 * delta ** 2 - 16 * delta - 28)


def _edge_degree(degree, u, v) -> int:
    return degree[u] + degree[v] - 2


def sombor_family(g: Graph, which: str, kg_literal: bool = False) -> IndexValue:
    which = which.upper()
    if which not in SOMBOR_INDICES:
        raise ValueError(f"Unknown Sombor index {which}, expected one of {SOMBOR_INDICES}")
    degree = g.degrees()
    edges = g.edges()

    if which == 'SO' or (which == 'KG' and kg_literal):
        value = math.fsum(math.hypot(degree[u], degree[v]) for u, v in edges)
        return real(value, KG_LITERAL_NOTE if which == 'KG' else '')

    if which == 'KG':
        terms = []
        for u, v in edges:
            de = _edge_degree(degree, u, v)
            terms.append(math.hypot(degree[u], de))
            terms.append(math.hypot(degree[v], de))
        return real(math.fsum(terms), KG_NOTE)

    if not edges:
        raise UndefinedIndexError("The multiplicative KG-Sombor index is an empty product on an edgeless graph")
    factors = []
    for u, v in edges:
        de = _edge_degree(degree, u, v)
        factors.append(math.log(math.hypot(degree[u], de) + math.hypot(degree[v], de)))
    return log_real(math.fsum(factors), MKG_NOTE)


def mkg_log(g: Graph) -> float:
    return sombor_family(g, 'MKG').value


def mkg_lower_bound(n: int, delta: int) -> Optional[float]:
    """Logarithm of the smallest multiplicative KG-Sombor value for connected graphs, when 2*delta <= n-1.

    The bound is attained by spiders whose delta legs all have length at least two.
    """
    if delta < 2 or 2 * delta > n - 1:
        return None
    return (delta * math.log(math.sqrt(delta ** 2 + 4) + math.sqrt(2) * delta)
            + delta * math.log(math.sqrt(5) + math.sqrt(2))
            + (n - 2 * delta - 1) * math.log(4 * math.sqrt(2)))


def exp_index_compare(g1: Graph, g2: Graph, base: str) -> Ordering:
    """Order of exp(base(g1)) against exp(base(g2)), decided on the exact exponents."""
    base = base.upper()
    if base not in ('HM1', 'HM2'):
        raise ValueError(f"Exponential comparison is defined for HM1 and HM2, got {base}")
    position = 0 if base == 'HM1' else 1
    return Ordering.of(hyper_zagreb(g1)[position].value, hyper_zagreb(g2)[position].value)


INDEX_NAMES = ('m1', 'm2', 'f', 'hm1', 'hm2', 'so', 'kg', 'mkg', 'ee')


def compute_index(g: Graph, name: str, kg_literal: bool = False, alpha: float = None) -> IndexValue:
    """Dispatch used by the command line and the extremal search."""
    name = name.lower()
    if name == 'm1':
        return general_zagreb(g, 1)
    if name == 'm2':
        return general_zagreb(g, 2)
    if name == 'f':
        return forgotten_index(g)
    if name == 'malpha':
        return general_zagreb(g, 1 if alpha is None else alpha)
    if name == 'hm1':
        return hyper_zagreb(g)[0]
    if name == 'hm2':
        return hyper_zagreb(g)[1]
    if name in ('so', 'kg', 'mkg'):
        return sombor_family(g, name, kg_literal=kg_literal)
    if name == 'ee':
        from graphbench_core.spectral.moments import estrada
        return estrada(g)
    raise ValueError(f"Unknown index {name}, expected one of {INDEX_NAMES}")
