"""
State spaces of the two chains: 0-1 matrices with fixed margins and tournaments with a
fixed score sequence.

Matrices store one bit mask per row, bit j set when cell (i, j) is 1.  Tournaments store
one mask per player holding the players it beats.
"""
from collections import namedtuple
from itertools import combinations
from typing import Iterator, List, Sequence, Union

from graphbench_core.errors import CapacityError, InfeasibleSpecError, PreconditionError
from graphbench_core.graph.graph import bits

MAX_STATES = 10 ** 6

MarginSpec = namedtuple('MarginSpec', ['rows', 'cols'])
ScoreSpec = namedtuple('ScoreSpec', ['scores'])
Spec = Union[MarginSpec, ScoreSpec]


class MarginMatrix:
    __slots__ = ('m', 'n', 'cells')

    def __init__(self, n: int, cells: Sequence[int]):
        self.m = len(cells)
        self.n = n
        self.cells = tuple(cells)

    @classmethod
    def from_rows(cls, rows: Sequence[str]) -> 'MarginMatrix':
        """From row strings such as ['10', '01']."""
        n = len(rows[0]) if rows else 0
        if any(len(row) != n or set(row) - {'0', '1'} for row in rows):
            raise PreconditionError(f"Rows must be 0/1 strings of one length, got {list(rows)}")
        return cls(n, [sum(1 << j for j, cell in enumerate(row) if cell == '1') for row in rows])

    def __eq__(self, other):
        return isinstance(other, MarginMatrix) and self.n == other.n and self.cells == other.cells

    def __hash__(self):
        return hash((self.n, self.cells))

    def __repr__(self):
        return f"MarginMatrix({self.row_strings()})"

    def cell(self, i: int, j: int) -> int:
        return self.cells[i] >> j & 1

    @property
    def rows(self) -> List[int]:
        return [bin(row).count('1') for row in self.cells]

    @property
    def cols(self) -> List[int]:
        return [sum(row >> j & 1 for row in self.cells) for j in range(self.n)]

    def row_strings(self) -> List[str]:
        return [''.join(str(row >> j & 1) for j in range(self.n)) for row in self.cells]

    def key(self) -> str:
        return '|'.join(self.row_strings())

    def to_primitive(self) -> List[str]:
        return self.row_strings()


class Tournament:
    __slots__ = ('n', 'beats')

    def __init__(self, n: int, beats: Sequence[int]):
        self.n = n
        self.beats = tuple(beats)

    @classmethod
    def from_arcs(cls, n: int, arcs) -> 'Tournament':
        beats = [0] * n
        for winner, loser in arcs:
            beats[winner] |= 1 << loser
        tournament = cls(n, beats)
        if not tournament.is_valid():
            raise PreconditionError(f"Arcs {list(arcs)} do not form a tournament on {n} players")
        return tournament

    def __eq__(self, other):
        return isinstance(other, Tournament) and self.beats == other.beats

    def __hash__(self):
        return hash(self.beats)

    def __repr__(self):
        return f"Tournament({self.arcs()})"

    def wins(self, a: int, b: int) -> bool:
        return bool(self.beats[a] >> b & 1)

    @property
    def scores(self) -> List[int]:
        return [bin(mask).count('1') for mask in self.beats]

    def arcs(self) -> List[List[int]]:
        return [[a, b] for a in range(self.n) for b in bits(self.beats[a])]

    def is_valid(self) -> bool:
        """Exactly one arc between every pair of players and no loops."""
        return all(not self.beats[a] >> a & 1 for a in range(self.n)) and \
            all(self.wins(a, b) != self.wins(b, a) for a, b in combinations(range(self.n), 2))

    def key(self) -> str:
        return ','.join(f"{a}>{b}" for a, b in self.arcs())

    def to_primitive(self) -> List[List[int]]:
        return self.arcs()


State = Union[MarginMatrix, Tournament]


def feasible_margins(r: Sequence[int], c: Sequence[int]) -> bool:
    """Gale-Ryser: a 0-1 matrix with row sums r and column sums c exists."""
    if any(value < 0 for value in list(r) + list(c)) or sum(r) != sum(c):
        return False
    if any(value > len(c) for value in r) or any(value > len(r) for value in c):
        return False
    conjugate = [sum(1 for value in r if value > j) for j in range(len(c))]
    ordered = sorted(c, reverse=True)
    return all(sum(ordered[:k]) <= sum(conjugate[:k]) for k in range(1, len(c) + 1))


def feasible_scores(s: Sequence[int]) -> bool:
    """Landau: the sorted prefix sums dominate C(k, 2) with equality at the end."""
    ordered = sorted(s)
    n = len(ordered)
    if any(value < 0 for value in ordered):
        return False
    return all(sum(ordered[:k]) >= k * (k - 1) // 2 for k in range(1, n + 1)) and sum(ordered) == n * (n - 1) // 2


def check_spec(spec: Spec):
    if isinstance(spec, MarginSpec):
        if not feasible_margins(spec.rows, spec.cols):
            raise InfeasibleSpecError(f"No 0-1 matrix has row sums {tuple(spec.rows)} and column sums "
                                      f"{tuple(spec.cols)}")
    elif not feasible_scores(spec.scores):
        raise InfeasibleSpecError(f"No tournament has score sequence {tuple(spec.scores)}")


def _iter_matrices(rows: Sequence[int], cols: Sequence[int]) -> Iterator[MarginMatrix]:
    m, n = len(rows), len(cols)

    def fill(i: int, remaining: List[int], cells: List[int]):
        if i == m:
            yield MarginMatrix(n, cells)
            return
        rows_left = m - i - 1
        # A column still needing more ones than there are rows left must take this row
        forced = [j for j in range(n) if remaining[j] > rows_left]
        if len(forced) > rows[i]:
            return
        for chosen in combinations(range(n), rows[i]):
            if any(remaining[j] == 0 for j in chosen) or not set(forced) <= set(chosen):
                continue
            for j in chosen:
                remaining[j] -= 1
            yield from fill(i + 1, remaining, cells + [sum(1 << j for j in chosen)])
            for j in chosen:
                remaining[j] += 1

    yield from fill(0, list(cols), [])


def _iter_tournaments(scores: Sequence[int]) -> Iterator[Tournament]:
    n = len(scores)
    pairs = list(combinations(range(n), 2))
    games_left = [n - 1] * n
    wins = [0] * n
    beats = [0] * n

    def play(index: int):
        if index == len(pairs):
            yield Tournament(n, beats)
            return
        a, b = pairs[index]
        games_left[a] -= 1
        games_left[b] -= 1
        for winner, loser in ((a, b), (b, a)):
            wins[winner] += 1
            if wins[winner] <= scores[winner] and wins[loser] + games_left[loser] >= scores[loser]:
                beats[winner] |= 1 << loser
                yield from play(index + 1)
                beats[winner] &= ~(1 << loser)
            wins[winner] -= 1
        games_left[a] += 1
        games_left[b] += 1

    yield from play(0)


def iter_states(spec: Spec) -> Iterator[State]:
    check_spec(spec)
    if isinstance(spec, MarginSpec):
        return _iter_matrices(spec.rows, spec.cols)
    return _iter_tournaments(spec.scores)


def enumerate_states(spec: Spec, limit: int = MAX_STATES) -> List[State]:
    """Every state of the spec, in backtracking order; CapacityError past limit."""
    states = []
    for state in iter_states(spec):
        if len(states) == limit:
            raise CapacityError(f"The state space of {spec} has more than {limit} states", module='chain',
                                limit=limit)
        states.append(state)
    return states


def first_state(spec: Spec) -> State:
    return next(iter_states(spec))


def score_sequences(n: int) -> List[ScoreSpec]:
    """Every non-decreasing score sequence of n players."""
    found = []

    def extend(prefix: List[int], low: int):
        k = len(prefix)
        if k == n:
            if sum(prefix) == n * (n - 1) // 2:
                found.append(ScoreSpec(tuple(prefix)))
            return
        for value in range(low, n):
            if sum(prefix) + value >= (k + 1) * k // 2:
                extend(prefix + [value], value)

    extend([], 0)
    return found


def margin_specs(m: int, n: int) -> List[MarginSpec]:
    """Feasible non-increasing margins of m x n matrices with at least one 1."""
    def vectors(length: int, top: int) -> List[tuple]:
        if length == 0:
            return [()]
        return [(first,) + rest for first in range(top, -1, -1) for rest in vectors(length - 1, first)]

    specs = []
    for rows in vectors(m, n):
        for cols in vectors(n, m):
            if sum(rows) == sum(cols) > 0 and feasible_margins(rows, cols):
                specs.append(MarginSpec(rows, cols))
    return specs


def spec_key(spec: Spec) -> str:
    if isinstance(spec, MarginSpec):
        return f"r={','.join(map(str, spec.rows))};c={','.join(map(str, spec.cols))}"
    return f"s={','.join(map(str, spec.scores))}"
