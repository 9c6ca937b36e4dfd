"""
Equitable colouring by backtracking with class-size bounds.

In an equitable k-colouring of n vertices exactly n mod k classes hold ceil(n/k) vertices
and the rest floor(n/k); classes may be empty when k > n.
"""
import math
from typing import List, Optional, Tuple

from graphbench_core.errors import CapacityError, PreconditionError
from graphbench_core.graph.graph import Bipartition, Graph, bits

MAX_COLORING_VERTICES = 16
MAX_CHROMATIC_VERTICES = 14


class EquitableColoring:
    __slots__ = ('k', 'classes')

    def __init__(self, k: int, classes: List[Tuple[int, ...]]):
        self.k = k
        self.classes = tuple(tuple(sorted(c)) for c in classes)

    @property
    def sizes(self) -> Tuple[int, ...]:
        return tuple(len(c) for c in self.classes)

    def colour_of(self) -> List[int]:
        colour = [0] * sum(self.sizes)
        for c, members in enumerate(self.classes):
            for v in members:
                colour[v] = c
        return colour

    def __repr__(self):
        return f"EquitableColoring(k={self.k}, classes={self.classes})"


def is_equitable(g: Graph, coloring: EquitableColoring) -> bool:
    for members in coloring.classes:
        mask = sum(1 << v for v in members)
        if any(g.rows[v] & mask for v in members):
            return False
    sizes = coloring.sizes
    return sum(sizes) == g.n and max(sizes) - min(sizes) <= 1


def equitable_color(g: Graph, k: int) -> Optional[EquitableColoring]:
    if g.n > MAX_COLORING_VERTICES:
        raise CapacityError(f"Equitable colouring is exhaustive up to {MAX_COLORING_VERTICES} vertices",
                            module='bipartite', limit=MAX_COLORING_VERTICES)
    if k < 1:
        raise PreconditionError(f"At least one colour is needed, got k={k}")

    small, large_count = divmod(g.n, k)
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    masks = [0] * k
    counts = [0] * k
    full = [0]      # classes already holding small + 1 vertices

    def place(position: int) -> bool:
        if position == g.n:
            return True
        remaining = g.n - position
        if sum(max(0, small - c) for c in counts) > remaining:
            return False
        v = order[position]
        opened = False
        for c in range(k):
            if counts[c] == 0:
                # Empty classes are interchangeable: only try the first one
                if opened:
                    continue
                opened = True
            if g.rows[v] & masks[c] or counts[c] > small:
                continue
            grows_large = counts[c] == small
            if grows_large and full[0] == large_count:
                continue
            masks[c] |= 1 << v
            counts[c] += 1
            full[0] += grows_large
            if place(position + 1):
                return True
            masks[c] ^= 1 << v
            counts[c] -= 1
            full[0] -= grows_large
        return False

    if not place(0):
        return None
    return EquitableColoring(k, [list(bits(mask)) for mask in masks])


def knn_condition(n: int, k: int) -> bool:
    """Whether K_{n,n} has an equitable k-colouring, by the closed-form test."""
    if k < 2:
        raise PreconditionError(f"The K_(n,n) condition needs k >= 2, got {k}")
    return -(-n // (k // 2)) - n // ((k + 1) // 2) <= 1


def equitable_chromatic_number(g: Graph) -> int:
    if g.n > MAX_CHROMATIC_VERTICES:
        raise CapacityError(f"The equitable chromatic number is exhaustive up to {MAX_CHROMATIC_VERTICES} vertices",
                            module='bipartite', limit=MAX_CHROMATIC_VERTICES)
    for k in range(1, g.n + 1):
        if equitable_color(g, k) is not None:
            return k
    return g.n


def tree_coloring_bound(bip: Bipartition) -> int:
    """ceil((|X| + |Y| + 1) / (min(|X|, |Y|) + 1))."""
    x, y = bip.sizes
    return -(-(x + y + 1) // (min(x, y) + 1))


def sparse_coloring_bound(g: Graph, bip: Bipartition) -> Optional[int]:
    """ceil(m/(n+1)) + 1 when the edge count is below floor(m/(n+1))(m-n) + 2m, m >= n the part sizes."""
    m, n = sorted(bip.sizes, reverse=True)
    if g.m >= (m // (n + 1)) * (m - n) + 2 * m:
        return None
    return math.ceil(m / (n + 1)) + 1
