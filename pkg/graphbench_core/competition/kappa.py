"""
Closed forms and bounds for competition numbers of complete multipartite graphs.
"""
import logging
from collections import namedtuple
from typing import Optional, Sequence

from graphbench_core.competition.cover import check_sorted, complete_multipartite, min_edge_clique_cover
from graphbench_core.errors import CapacityError, PreconditionError

log = logging.getLogger('graphbench.competition')

Bounds = namedtuple('Bounds', ['lower', 'upper'])


def tripartite_kappa(n1: int, n2: int, n3: int) -> int:
    check_sorted((n1, n2, n3))
    n = n1 + n2 + n3
    if n2 >= n3 + 2:
        return n1 * n2 - n + 2
    if n2 == n3 + 1 or n2 == n3 == 1:
        return n1 * n2 - n + 3
    return n1 * n2 - n + 4


def multipartite_bounds(parts: Sequence[int], r_admissible: bool = True) -> Bounds:
    """min{2 n2 - 1, n1 + nr - 2} below; n^2 - 2n + 2 above for balanced K_r(n) with n != 2 mod 4.

    Whether r lies in the admissible range of the balanced edge clique cover result is
    not decidable here, so the caller vouches for it with r_admissible.
    """
    check_sorted(parts)
    if len(parts) < 2:
        raise PreconditionError(f"At least two parts are needed, got {tuple(parts)}")
    lower = min(2 * parts[1] - 1, parts[0] + parts[-1] - 2)
    n = parts[0]
    upper = None
    if r_admissible and len(set(parts)) == 1 and n % 4 != 2:
        upper = n * n - 2 * n + 2
    return Bounds(lower, upper)


def balanced_lower_bounds(r: int, n: int) -> Sequence[int]:
    """3n - 5 for n >= 2, and n^2 - rn + 3r - 5 as well for n >= 3."""
    bounds = []
    if n >= 2:
        bounds.append(3 * n - 5)
    if n >= 3:
        bounds.append(n * n - r * n + 3 * r - 5)
    return bounds


def multipartite_kappa_formula(parts: Sequence[int]) -> Optional[int]:
    """n1 n2 - n + 2 when the four-partite, r-partite or five-partite hypotheses hold, else None."""
    check_sorted(parts)
    r = len(parts)
    if r < 4:
        return None
    n1, n2, n3 = parts[:3]
    value = n1 * n2 - sum(parts) + 2
    if r == 4 and n1 * (n2 - n3 - 2) >= n3 * (parts[3] - 1):
        return value
    if r == 5 and n1 >= 5 and n2 >= n3 + parts[3] + 2:
        return value
    if n1 >= r - 2 >= 3:
        try:
            theta = len(min_edge_clique_cover(complete_multipartite(parts[2:])))
        except CapacityError:
            log.debug(f"theta_e of K{tuple(parts[2:])} is out of reach, r-partite hypothesis skipped")
            return None
        if n1 * (n2 - n3 - 2) - r + 4 >= theta:
            return value
    return None
