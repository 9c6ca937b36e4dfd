"""
Seeded sampling runs of the chains, NDJSON output and empirical state frequencies.
"""
import json
import math
from collections import namedtuple
from typing import Iterator, List, Optional, Sequence

import numpy as np

from graphbench_core.chain.moves import chain_step
from graphbench_core.chain.states import MarginMatrix, Spec, State, Tournament, check_spec, first_state
from graphbench_core.errors import PreconditionError

BATCHES = 20

Frequency = namedtuple('Frequency', ['key', 'count', 'frequency', 'stderr'])


def sample(spec: Spec, steps: int, seed: int, start: Optional[State] = None) -> Iterator[State]:
    """The states after steps 1..steps of one seeded run from start, or the first enumerated state."""
    check_spec(spec)
    state = start or first_state(spec)
    rng = np.random.default_rng(seed)
    for _ in range(steps):
        following = chain_step(state, rng)
        _check_preserved(state, following)
        state = following
        yield state


def _check_preserved(before: State, after: State):
    if isinstance(before, MarginMatrix):
        preserved = after.rows == before.rows and after.cols == before.cols
    else:
        preserved = after.scores == before.scores and after.is_valid()
    if not preserved:
        raise PreconditionError(f"Step from {before} to {after} broke the state constraints")


def ndjson(states: Iterator[State]) -> Iterator[str]:
    """One JSON line per state: matrices as row strings, tournaments as arc lists."""
    for step, state in enumerate(states, start=1):
        field = 'rows' if isinstance(state, MarginMatrix) else 'arcs'
        yield json.dumps({'step': step, field: state.to_primitive()})


def parse_state(line: str) -> State:
    data = json.loads(line)
    if 'rows' in data:
        return MarginMatrix.from_rows(data['rows'])
    players = 1 + max((max(arc) for arc in data['arcs']), default=0)
    return Tournament.from_arcs(players, data['arcs'])


def empirical_frequencies(spec: Spec, steps: int, seed: int, states: Sequence[State],
                          batches: int = BATCHES) -> List[Frequency]:
    """Visit frequency of every state, with a batch-means standard error."""
    index = {state: i for i, state in enumerate(states)}
    size = max(1, steps // batches)
    counts = np.zeros((batches, len(states)))
    for step, state in enumerate(sample(spec, size * batches, seed)):
        counts[step // size, index[state]] += 1
    means = counts / size
    totals = counts.sum(axis=0)
    spread = means.std(axis=0, ddof=1) if batches > 1 else np.zeros(len(states))
    return [Frequency(state.key(), int(totals[i]), float(totals[i] / (size * batches)),
                      float(spread[i] / math.sqrt(batches)))
            for i, state in enumerate(states)]


def uniform_within(frequencies: List[Frequency], sigmas: float = 3.0) -> bool:
    """Every frequency lies within sigmas standard errors of 1 / |states|."""
    target = 1 / len(frequencies)
    return all(abs(item.frequency - target) <= sigmas * item.stderr + 1e-12 for item in frequencies)


def near_regular(s: Sequence[int], epsilon: float = 0.01, constant: float = 1.0) -> bool:
    """max |s_i - (n - 1) / 2| <= constant n^(3/4 + epsilon); advisory."""
    n = len(s)
    if n == 0:
        return True
    return max(abs(value - (n - 1) / 2) for value in s) <= constant * n ** (0.75 + epsilon)
