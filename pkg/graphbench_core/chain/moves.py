"""
Moves of the two lazy chains.

Matrix chain: with probability 1/2 hold, otherwise pick an ordered pair of distinct rows
(i, i2) and an ordered pair of distinct columns (j, j2); swap the minor when it reads
[[1, 0], [0, 1]].  Tournament chain: with probability 1/2 hold, otherwise pick an ordered
triple of distinct players (a, b, c) and reverse the triangle when a -> b -> c -> a.
Every proposal has an inverse proposal of the same probability, so both chains are
symmetric and their stationary distribution is uniform.
"""
from collections import Counter
from itertools import permutations
from typing import Dict, Tuple, Union

import numpy as np

from graphbench_core.chain.states import MarginMatrix, State, Tournament

LAZINESS = 0.5
MOVE_NAMES = {
    'matrix': "checkerboard switch of an ordered 2x2 minor, hold probability 1/2",
    'tournament': "reversal of an ordered directed triangle, hold probability 1/2",
}

Seed = Union[int, np.random.Generator, None]


def _rng(seed: Seed) -> np.random.Generator:
    return seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)


def switch(state: MarginMatrix, i: int, i2: int, j: int, j2: int) -> MarginMatrix:
    if not (state.cell(i, j) and state.cell(i2, j2) and not state.cell(i, j2) and not state.cell(i2, j)):
        return state
    cells = list(state.cells)
    toggle = (1 << j) | (1 << j2)
    cells[i] ^= toggle
    cells[i2] ^= toggle
    return MarginMatrix(state.n, cells)


def reverse_triangle(state: Tournament, a: int, b: int, c: int) -> Tournament:
    if not (state.wins(a, b) and state.wins(b, c) and state.wins(c, a)):
        return state
    beats = list(state.beats)
    for winner, loser in ((a, b), (b, c), (c, a)):
        beats[winner] &= ~(1 << loser)
        beats[loser] |= 1 << winner
    return Tournament(state.n, beats)


def proposals(state: State) -> int:
    """Number of equally likely non-lazy proposals."""
    if isinstance(state, MarginMatrix):
        return state.m * (state.m - 1) * state.n * (state.n - 1)
    return state.n * (state.n - 1) * (state.n - 2)


def move_census(state: State) -> Tuple[Dict[State, int], int]:
    """Count the proposals leading to each different state; also return the proposal total."""
    reached = Counter()
    if isinstance(state, MarginMatrix):
        for i, i2 in permutations(range(state.m), 2):
            for j, j2 in permutations(range(state.n), 2):
                target = switch(state, i, i2, j, j2)
                if target != state:
                    reached[target] += 1
    else:
        for a, b, c in permutations(range(state.n), 3):
            target = reverse_triangle(state, a, b, c)
            if target != state:
                reached[target] += 1
    return dict(reached), proposals(state)


def chain_step(state: State, seed: Seed = None) -> State:
    """One lazy step; seed is an integer or a generator shared across steps."""
    rng = _rng(seed)
    if rng.random() < LAZINESS or proposals(state) == 0:
        return state
    if isinstance(state, MarginMatrix):
        i, i2 = (int(x) for x in rng.choice(state.m, 2, replace=False))
        j, j2 = (int(x) for x in rng.choice(state.n, 2, replace=False))
        return switch(state, i, i2, j, j2)
    a, b, c = (int(x) for x in rng.choice(state.n, 3, replace=False))
    return reverse_triangle(state, a, b, c)


def chain_kind(state: State) -> str:
    return 'matrix' if isinstance(state, MarginMatrix) else 'tournament'
