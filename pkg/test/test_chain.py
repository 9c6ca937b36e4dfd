import json
from fractions import Fraction

import numpy as np
import pytest

from graphbench_core.chain.diagnostics import (ChainDiagnostics, check_stationary, conductance, diagnostics,
                                               mixing_bound, transition_rows)
from graphbench_core.chain.moves import chain_step, move_census, proposals, reverse_triangle, switch
from graphbench_core.chain.sample import (empirical_frequencies, ndjson, near_regular, parse_state, sample,
                                          uniform_within)
from graphbench_core.chain.states import (MarginMatrix, MarginSpec, ScoreSpec, Tournament, enumerate_states,
                                          feasible_margins, feasible_scores, margin_specs, score_sequences,
                                          spec_key)
from graphbench_core.errors import CapacityError, InfeasibleSpecError, PreconditionError

SWAP = MarginSpec((1, 1), (1, 1))
CYCLIC = ScoreSpec((1, 1, 1))
TRANSITIVE = ScoreSpec((0, 1, 2))


def test_feasibility():
    assert not feasible_margins((2,), (1,))
    assert feasible_margins((2, 2), (2, 1, 1))
    assert feasible_scores((1, 1, 1))
    assert feasible_scores((2, 1, 0))
    assert not feasible_scores((0, 0, 3))


def test_enumerate_states():
    assert len(enumerate_states(MarginSpec((1, 1, 1), (1, 1, 1)))) == 6
    assert len(enumerate_states(MarginSpec((2, 1), (1, 1, 1)))) == 3
    assert len(enumerate_states(CYCLIC)) == 2
    assert len(enumerate_states(TRANSITIVE)) == 1
    states = enumerate_states(MarginSpec((2, 2), (2, 1, 1)))
    assert all(state.rows == [2, 2] and state.cols == [2, 1, 1] for state in states)
    with pytest.raises(CapacityError):
        enumerate_states(MarginSpec((1, 1, 1), (1, 1, 1)), limit=5)
    with pytest.raises(InfeasibleSpecError):
        enumerate_states(ScoreSpec((0, 0, 3)))


def test_spec_generators():
    assert score_sequences(3) == [ScoreSpec((0, 1, 2)), ScoreSpec((1, 1, 1))]
    assert len(score_sequences(4)) == 4
    specs = margin_specs(2, 2)
    assert MarginSpec((1, 1), (1, 1)) in specs
    assert MarginSpec((2, 0), (1, 1)) in specs
    assert all(sum(spec.rows) > 0 for spec in specs)
    assert spec_key(SWAP) == 'r=1,1;c=1,1'
    assert spec_key(CYCLIC) == 's=1,1,1'


def test_states():
    matrix = MarginMatrix.from_rows(['10', '01'])
    assert matrix.rows == [1, 1] and matrix.cols == [1, 1]
    assert matrix.key() == '10|01'
    with pytest.raises(PreconditionError):
        MarginMatrix.from_rows(['10', '1'])

    tournament = Tournament.from_arcs(3, [[0, 1], [1, 2], [2, 0]])
    assert tournament.scores == [1, 1, 1]
    assert tournament.key() == '0>1,1>2,2>0'
    with pytest.raises(PreconditionError):
        Tournament.from_arcs(3, [[0, 1], [1, 0], [2, 0]])


def test_moves():
    matrix = MarginMatrix.from_rows(['10', '01'])
    assert switch(matrix, 0, 1, 0, 1) == MarginMatrix.from_rows(['01', '10'])
    assert switch(matrix, 0, 1, 1, 0) == matrix
    assert proposals(matrix) == 4

    cyclic = Tournament.from_arcs(3, [[0, 1], [1, 2], [2, 0]])
    reversed_cycle = reverse_triangle(cyclic, 0, 1, 2)
    assert reversed_cycle.arcs() == [[0, 2], [1, 0], [2, 1]]
    assert reverse_triangle(cyclic, 0, 2, 1) == cyclic
    reached, total = move_census(cyclic)
    assert reached == {reversed_cycle: 3}
    assert total == 6


def test_chain_step_is_seeded():
    matrix = MarginMatrix.from_rows(['10', '01'])
    rng = np.random.default_rng(4)
    walk = [chain_step(matrix, rng) for _ in range(20)]
    rng = np.random.default_rng(4)
    assert walk == [chain_step(matrix, rng) for _ in range(20)]
    assert all(state.rows == [1, 1] and state.cols == [1, 1] for state in walk)


def test_transition_rows():
    states = enumerate_states(SWAP)
    rows = transition_rows(states)
    assert rows == [{0: Fraction(3, 4), 1: Fraction(1, 4)}, {0: Fraction(1, 4), 1: Fraction(3, 4)}]
    check_stationary(ChainDiagnostics(SWAP, states, rows, exact=True))


@pytest.mark.parametrize("spec", [SWAP, CYCLIC])
def test_two_state_diagnostics(spec):
    result = diagnostics(spec, 0.01)
    assert result.size == 2
    assert result.exact
    assert result.tv == [Fraction(1, 2 ** (t + 1)) for t in range(7)]
    assert result.tau == 6
    assert result.conductance == Fraction(1, 4)
    assert result.spectral_gap() == pytest.approx(0.5)
    assert result.is_symmetric()
    assert result.is_connected()

    report = result.report()
    assert report.tau == 6
    assert report.tv[0] == '1/2'
    assert report.epsilon == '1/100'
    assert report.monotone
    assert report.conductance == '1/4'
    assert not report.degenerate


def test_float_diagnostics_agree():
    exact = diagnostics(SWAP, 0.01)
    approximate = diagnostics(SWAP, 0.01, rational_states=0)
    assert not approximate.exact
    assert approximate.tau == exact.tau
    assert approximate.tv == pytest.approx([float(value) for value in exact.tv])
    assert approximate.conductance == pytest.approx(0.25)


def test_degenerate_chain():
    result = diagnostics(TRANSITIVE)
    assert result.tau == 0
    assert result.conductance is None
    report = result.report()
    assert report.degenerate
    assert report.spectral_gap is None
    assert conductance(result) == (None, None)


def test_diagnostics_capacity():
    with pytest.raises(CapacityError):
        diagnostics(MarginSpec((1, 1, 1), (1, 1, 1)), max_states=5)


def test_mixing_bound():
    assert mixing_bound(0.25, 2, 0.01) == pytest.approx(32 * np.log(200))
    assert diagnostics(SWAP).tau <= mixing_bound(0.25, 2, 0.01)


def test_sample():
    run = list(sample(SWAP, 50, seed=3))
    assert len(run) == 50
    assert run == list(sample(SWAP, 50, seed=3))
    assert set(run) <= set(enumerate_states(SWAP))

    with pytest.raises(InfeasibleSpecError):
        list(sample(MarginSpec((2,), (1,)), 5, seed=1))


def test_ndjson():
    lines = list(ndjson(sample(CYCLIC, 3, seed=9)))
    assert len(lines) == 3
    first = json.loads(lines[0])
    assert first['step'] == 1
    assert 'arcs' in first
    assert parse_state(lines[0]).scores == [1, 1, 1]

    matrix_line = next(ndjson(sample(SWAP, 1, seed=9)))
    assert parse_state(matrix_line).rows == [1, 1]


def test_empirical_frequencies():
    states = enumerate_states(SWAP)
    frequencies = empirical_frequencies(SWAP, 4000, 5, states)
    assert sum(item.count for item in frequencies) == 4000
    assert sum(item.frequency for item in frequencies) == pytest.approx(1.0)
    assert uniform_within(frequencies, sigmas=6.0)


def test_near_regular():
    assert near_regular(tuple(range(16)))
    assert not near_regular(tuple(range(64)))
    assert near_regular(())
