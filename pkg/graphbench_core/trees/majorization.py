"""
Majorization of degree sequences and unit-transfer chains between them.
"""
from collections import deque
from itertools import accumulate
from typing import Dict, List, Optional, Sequence

from graphbench_core.errors import PreconditionError
from graphbench_core.graph.graph import DegreeSequence, is_graphical


def _sequence(degrees: Sequence[int]) -> DegreeSequence:
    return degrees if isinstance(degrees, DegreeSequence) else DegreeSequence(degrees)


def majorizes(d: Sequence[int], b: Sequence[int]) -> bool:
    """True when every prefix sum of d is at least the matching prefix sum of b."""
    d, b = _sequence(d), _sequence(b)
    if len(d) != len(b):
        raise PreconditionError(f"Majorization compares sequences of equal length, got {len(d)} and {len(b)}")
    return all(x >= y for x, y in zip(accumulate(d), accumulate(b)))


def unit_transfers(degrees: DegreeSequence) -> List[DegreeSequence]:
    """Sequences reached by moving one unit from a later entry to an earlier one, staying sorted."""
    values = degrees.degrees
    n = len(values)
    firsts = [i for i in range(n) if i == 0 or values[i - 1] != values[i]]
    lasts = [j for j in range(n) if j == n - 1 or values[j + 1] != values[j]]
    found = []
    for i in firsts:
        for j in lasts:
            if j <= i or values[j] == 0:
                continue
            moved = list(values)
            moved[i] += 1
            moved[j] -= 1
            found.append(DegreeSequence(moved))
    return found


def majorization_chain(d: Sequence[int], dp: Sequence[int]) -> List[DegreeSequence]:
    """Shortest chain of graphic sequences from d up to dp in which neighbours differ by one unit in two entries.

    dp must majorize d, both must be graphic with the same length and total, and d != dp.
    """
    d, dp = _sequence(d), _sequence(dp)
    if d == dp:
        raise PreconditionError("A majorization chain needs two distinct sequences")
    if len(d) != len(dp) or d.total != dp.total:
        raise PreconditionError(f"{d} and {dp} differ in length or total degree")
    if not (is_graphical(d.degrees) and is_graphical(dp.degrees)):
        raise PreconditionError(f"Both sequences must be graphic: {d}, {dp}")
    if not majorizes(dp, d):
        raise PreconditionError(f"{dp} does not majorize {d}")

    parent: Dict[DegreeSequence, Optional[DegreeSequence]] = {d: None}
    queue = deque([d])
    while queue:
        current = queue.popleft()
        if current == dp:
            break
        for following in unit_transfers(current):
            if following in parent or not is_graphical(following.degrees) or not majorizes(dp, following):
                continue
            parent[following] = current
            queue.append(following)

    if dp not in parent:
        raise PreconditionError(f"No graphic unit-transfer chain joins {d} and {dp}")
    chain = [dp]
    while parent[chain[-1]] is not None:
        chain.append(parent[chain[-1]])
    return chain[::-1]
