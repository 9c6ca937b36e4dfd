"""
Balanced bi-holes: A' in A and B' in B of equal size with no edge between them.
"""
import math
from collections import namedtuple
from itertools import combinations
from typing import List, Sequence

from graphbench_core.errors import CapacityError, PreconditionError
from graphbench_core.graph.graph import Bipartition, Graph, bits

MAX_BIHOLE_SIDE = 12
MAX_THRESHOLD_SIDE = 7
MAX_THRESHOLD_DEGREE = 3

ONE_SIDED = 'one-sided'
BOTH_SIDES = 'both-sides'

BiHole = namedtuple('BiHole', ['k', 'part_a', 'part_b'])


def _side_masks(g: Graph, bip: Bipartition) -> List[int]:
    """Neighbourhood of every A vertex as a bit mask over the positions of B."""
    position = {v: index for index, v in enumerate(bip.part_b)}
    masks = []
    for v in bip.part_a:
        mask = 0
        for w in bits(g.rows[v]):
            if w in position:
                mask |= 1 << position[w]
        masks.append(mask)
    return masks


def _largest_hole(masks: Sequence[int], size_b: int):
    """(k, chosen A positions, free B mask) of a largest balanced bi-hole."""
    best = (0, 0, (1 << size_b) - 1)
    for subset in range(1, 1 << len(masks)):
        covered = 0
        for index in bits(subset):
            covered |= masks[index]
        k = min(bin(subset).count('1'), size_b - bin(covered).count('1'))
        if k > best[0]:
            best = (k, subset, ((1 << size_b) - 1) & ~covered)
    return best


def max_bihole(g: Graph, bip: Bipartition) -> BiHole:
    size_a, size_b = bip.sizes
    if size_a != size_b:
        raise PreconditionError(f"Bi-holes are measured on balanced parts, got {size_a} and {size_b}")
    if size_a > MAX_BIHOLE_SIDE:
        raise CapacityError(f"Bi-hole search is exhaustive up to {MAX_BIHOLE_SIDE} vertices per side",
                            module='bipartite', limit=MAX_BIHOLE_SIDE)
    k, subset, free = _largest_hole(_side_masks(g, bip), size_b)
    part_a = [bip.part_a[index] for index in bits(subset)][:k]
    part_b = [bip.part_b[index] for index in bits(free)][:k]
    return BiHole(k, tuple(part_a), tuple(part_b))


def bihole_threshold(n: int, delta: int, mode: str = ONE_SIDED) -> int:
    """Smallest largest-bi-hole over n+n bipartite graphs with degree at most delta.

    one-sided bounds the degrees of A only, both-sides bounds every degree.
    """
    if mode not in (ONE_SIDED, BOTH_SIDES):
        raise ValueError(f"Unknown mode {mode}, expected {ONE_SIDED} or {BOTH_SIDES}")
    if n > MAX_THRESHOLD_SIDE or delta > MAX_THRESHOLD_DEGREE:
        raise CapacityError(f"Bi-hole thresholds are exhaustive up to n={MAX_THRESHOLD_SIDE}, "
                            f"delta={MAX_THRESHOLD_DEGREE}", module='bipartite', limit=MAX_THRESHOLD_SIDE)
    if n < 1 or delta < 0:
        raise PreconditionError(f"Need n >= 1 and delta >= 0, got n={n}, delta={delta}")
    degree = min(delta, n)

    if mode == ONE_SIDED:
        # Adding edges never enlarges a bi-hole, so A vertices may take exactly `degree` neighbours
        choices = [sum(1 << j for j in subset) for subset in combinations(range(n), degree)]
    else:
        choices = [mask for mask in range(1 << n) if bin(mask).count('1') <= degree]
    choices.sort()

    best = [n]

    def extend(masks: List[int], start: int, loads: List[int]):
        if _largest_hole(masks, n)[0] >= best[0]:
            return
        if len(masks) == n:
            best[0] = _largest_hole(masks, n)[0]
            return
        for index in range(start, len(choices)):
            mask = choices[index]
            if mode == BOTH_SIDES and any(loads[j] >= degree for j in bits(mask)):
                continue
            for j in bits(mask):
                loads[j] += 1
            extend(masks + [mask], index, loads)
            for j in bits(mask):
                loads[j] -= 1

    if not choices or degree == 0:
        return n
    # Relabel B so that an A vertex of least degree p sees positions 0..p-1; its mask is then the smallest
    first = [(1 << p) - 1 for p in range(degree + 1) if mode == BOTH_SIDES or p == degree]
    for mask in first:
        loads = [0] * n
        for j in bits(mask):
            loads[j] += 1
        extend([mask], choices.index(mask), loads)
    return best[0]


def asymptotic_bihole_bound(n: int, delta: int) -> float:
    """(1/2)(log delta / delta) n, printed beside the exact thresholds."""
    if delta < 2:
        return float(n)
    return 0.5 * math.log(delta) / delta * n
