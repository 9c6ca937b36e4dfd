"""
Checkers for the chain claims: reversibility, irreducibility, uniform sampling, the
monotone distance curve and the conductance bounds on the mixing time.
"""
import functools
from typing import List, Optional, Tuple

from graphbench_core.chain.diagnostics import ChainDiagnostics, diagnostics, mixing_bound, transition_rows
from graphbench_core.chain.sample import empirical_frequencies, uniform_within
from graphbench_core.chain.states import Spec, enumerate_states, margin_specs, score_sequences, spec_key
from graphbench_core.errors import CapacityError
from graphbench_core.verification.registry import claim
from graphbench_core.verification.report import ClaimTally
from graphbench_core.verification.sweep import Sweeper

CHEEGER_TOLERANCE = 1e-9
SKIPPED_NOTE = "specs with more states than max_states are scanned but do not qualify"
MOVES_NOTE = ("moves are not given; the checkerboard switch and the directed triangle reversal are used, each "
              "held with probability 1/2")
DISCONNECTED_NOTE = "chains whose move graph is disconnected have no mixing time and do not qualify"
BOUNDS_NOTE = "checked: phi^2 / 2 <= spectral gap <= 2 phi and tau(epsilon) <= (2 / phi^2) ln(|Omega| / epsilon)"


def chain_specs(params: dict) -> List[Spec]:
    specs: List[Spec] = []
    for m in range(1, params['max_n'] + 1):
        for n in range(1, params['max_n'] + 1):
            specs.extend(margin_specs(m, n))
    for players in range(1, params['players'] + 1):
        specs.extend(score_sequences(players))
    return specs


@functools.lru_cache(maxsize=None)
def _chain(spec: Spec, max_states: int) -> Optional[ChainDiagnostics]:
    try:
        states = enumerate_states(spec, limit=max_states)
    except CapacityError:
        return None
    return ChainDiagnostics(spec, states, transition_rows(states), exact=True)


def _sized(params: dict, min_states: int, max_states: int) -> List[Tuple[Spec, Optional[ChainDiagnostics]]]:
    """Specs paired with their chain, or None past max_states; chains below min_states are left out."""
    items = [(spec, _chain(spec, max_states)) for spec in chain_specs(params)]
    return [(spec, chain) for spec, chain in items if chain is None or chain.size >= min_states]


CHAIN_DEFAULTS = dict(max_n=3, players=6, max_states=2000)


@claim('chain-detailed-balance', anchor="It is reversible, satisfying the detailed balance condition pi(x) P(x,y) "
                                        "= pi(y) P(y,x), for all x,y in Omega", module='chain', **CHAIN_DEFAULTS)
def check_detailed_balance(params: dict, sweeper: Sweeper) -> ClaimTally:
    def check(item, tally: ClaimTally):
        spec, chain = item
        tally.scanned(chain is not None)
        tally.note(MOVES_NOTE)
        if chain is None:
            tally.note(SKIPPED_NOTE)
        elif not chain.is_symmetric():
            tally.fail(spec_key(spec), states=chain.size)
        elif chain.size > 1:
            tally.witness(spec_key(spec), states=chain.size)
    return sweeper.sweep(_sized(params, 1, params['max_states']), check)


@claim('chain-irreducible', anchor="The method relies on a Markov chain that is irreducible for all score "
                                   "sequences", module='chain', **CHAIN_DEFAULTS)
def check_irreducible(params: dict, sweeper: Sweeper) -> ClaimTally:
    def check(item, tally: ClaimTally):
        spec, chain = item
        tally.scanned(chain is not None)
        tally.note(MOVES_NOTE)
        if chain is None:
            tally.note(SKIPPED_NOTE)
        elif not chain.is_connected():
            tally.fail(spec_key(spec), states=chain.size)
        elif chain.size > 1:
            tally.witness(spec_key(spec), states=chain.size)
    return sweeper.sweep(_sized(params, 1, params['max_states']), check)


@claim('chain-uniform-sampling', anchor="A fully polynomial randomized algorithm is provided to generate a member of "
                                        "T(s) nearly uniformly at random", module='chain',
       max_n=2, players=6, max_states=50, steps=1000000, seed=5, sigmas=3.0)
def check_uniform_sampling(params: dict, sweeper: Sweeper) -> ClaimTally:
    def check(item, tally: ClaimTally):
        spec, chain = item
        tally.scanned(chain is not None)
        if chain is None:
            tally.note(SKIPPED_NOTE)
            return
        frequencies = empirical_frequencies(spec, params['steps'], params['seed'], chain.states)
        if uniform_within(frequencies, params['sigmas']):
            tally.witness(spec_key(spec), states=chain.size,
                          spread=max(abs(item.frequency - 1 / chain.size) for item in frequencies))
        else:
            worst = max(frequencies, key=lambda item: abs(item.frequency - 1 / chain.size))
            tally.fail(spec_key(spec), state=worst.key, frequency=worst.frequency, stderr=worst.stderr)
    return sweeper.sweep(_sized(params, 2, params['max_states']), check)


@claim('tv-monotone', anchor="tau(epsilon) = min{t : Delta_tv(t') <= epsilon, for all t' >= t}", module='chain',
       max_n=3, players=5, max_states=60, epsilon=0.01)
def check_tv_monotone(params: dict, sweeper: Sweeper) -> ClaimTally:
    def check(item, tally: ClaimTally):
        spec, chain = item
        tally.scanned(chain is not None and chain.is_connected())
        if chain is None or not chain.is_connected():
            tally.note(SKIPPED_NOTE if chain is None else DISCONNECTED_NOTE)
            return
        result = diagnostics(spec, params['epsilon'], max_states=params['max_states'])
        curve = result.tv
        if any(later > earlier for earlier, later in zip(curve, curve[1:])):
            tally.fail(spec_key(spec), tau=result.tau, curve=[str(value) for value in curve])
        else:
            tally.witness(spec_key(spec), tau=result.tau, states=result.size)
    return sweeper.sweep(_sized(params, 2, params['max_states']), check)


@claim('conductance-mixing-bound', anchor="Conductance Phi measures the bottleneck of the chain and influences the "
                                          "mixing time", module='chain', max_n=3, players=5, max_states=12,
       epsilon=0.01)
def check_conductance_bound(params: dict, sweeper: Sweeper) -> ClaimTally:
    def check(item, tally: ClaimTally):
        spec, chain = item
        tally.scanned(chain is not None and chain.is_connected())
        tally.note(BOUNDS_NOTE)
        if chain is None or not chain.is_connected():
            tally.note(SKIPPED_NOTE if chain is None else DISCONNECTED_NOTE)
            return
        result = diagnostics(spec, params['epsilon'], max_states=params['max_states'])
        phi = float(result.conductance)
        gap = result.spectral_gap()
        bound = mixing_bound(phi, result.size, params['epsilon'])
        if phi * phi / 2 - CHEEGER_TOLERANCE <= gap <= 2 * phi + CHEEGER_TOLERANCE and result.tau <= bound:
            tally.witness(spec_key(spec), phi=result.conductance, gap=f"{gap:.6g}", tau=result.tau)
        else:
            tally.fail(spec_key(spec), phi=result.conductance, gap=gap, tau=result.tau, bound=bound)
    return sweeper.sweep(_sized(params, 2, params['max_states']), check)
