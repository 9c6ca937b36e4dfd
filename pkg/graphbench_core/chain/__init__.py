from graphbench_core.chain.diagnostics import ChainDiagnostics, DiagnosticsReport, diagnostics
from graphbench_core.chain.moves import chain_step
from graphbench_core.chain.sample import empirical_frequencies, ndjson, near_regular, sample
from graphbench_core.chain.states import (MarginMatrix, MarginSpec, ScoreSpec, Tournament, enumerate_states,
                                          feasible_margins, feasible_scores, margin_specs, score_sequences)

__all__ = ['ChainDiagnostics', 'DiagnosticsReport', 'MarginMatrix', 'MarginSpec', 'ScoreSpec', 'Tournament',
           'chain_step', 'diagnostics', 'empirical_frequencies', 'enumerate_states', 'feasible_margins',
           'feasible_scores', 'margin_specs', 'ndjson', 'near_regular', 'sample', 'score_sequences']
