"""
Exact mixing diagnostics of the chains on an enumerated state space.

The transition matrix comes from the move census of every state.  Up to `rational_states`
states every probability is a Fraction, so symmetry, stationarity and the distance curve are
exact; beyond that numpy floats are used with a 1e-12 stationarity tolerance.
"""
import logging
import math
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from assemblyline import odm

from graphbench_core.chain.moves import MOVE_NAMES, chain_kind, move_census
from graphbench_core.chain.states import Spec, State, enumerate_states, spec_key
from graphbench_core.errors import CapacityError, NumericError

log = logging.getLogger('graphbench.chain')

MAX_DIAGNOSTIC_STATES = 2000
MAX_CONDUCTANCE_STATES = 22
MAX_TV_STEPS = 10000
RATIONAL_STATES = 200
STATIONARY_TOLERANCE = 1e-12
CUT_CHUNK = 1 << 15

Row = Dict[int, Fraction]


@odm.model()
class DiagnosticsReport(odm.Model):
    spec = odm.Keyword()
    kind = odm.Enum(values=['matrix', 'tournament'])
    moves = odm.Text()
    states = odm.Integer()
    exact = odm.Boolean()
    epsilon = odm.Keyword()
    tau = odm.Integer()
    tv = odm.List(odm.Keyword(), default=[])     # distance at t = 0..tau
    monotone = odm.Boolean()
    symmetric = odm.Boolean()
    conductance = odm.Optional(odm.Keyword())    # unset when degenerate or past the subset limit
    degenerate = odm.Boolean(default=False)
    spectral_gap = odm.Optional(odm.Keyword())


class ChainDiagnostics:
    def __init__(self, spec: Spec, states: List[State], rows: List[Row], exact: bool):
        self.spec = spec
        self.states = states
        self.rows = rows
        self.exact = exact
        self.epsilon = None
        self.tv: List = []
        self.tau: Optional[int] = None
        self.conductance = None

    @property
    def size(self) -> int:
        return len(self.states)

    @property
    def kind(self) -> str:
        return chain_kind(self.states[0])

    def matrix(self) -> np.ndarray:
        dense = np.zeros((self.size, self.size))
        for x, row in enumerate(self.rows):
            for y, p in row.items():
                dense[x, y] = float(p)
        return dense

    def probability(self, x: int, y: int):
        return self.rows[x].get(y, 0)

    def is_symmetric(self) -> bool:
        """P(x,y) = P(y,x), which with uniform pi is detailed balance."""
        return all(self.probability(y, x) == p for x, row in enumerate(self.rows) for y, p in row.items())

    def is_connected(self) -> bool:
        seen = {0}
        stack = [0]
        while stack:
            x = stack.pop()
            for y, p in self.rows[x].items():
                if p and y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == self.size

    def spectral_gap(self) -> float:
        eigenvalues = np.linalg.eigvalsh((self.matrix() + self.matrix().T) / 2)
        return float(1 - eigenvalues[-2]) if self.size > 1 else 1.0

    def report(self) -> DiagnosticsReport:
        return DiagnosticsReport({
            'spec': spec_key(self.spec),
            'kind': self.kind,
            'moves': MOVE_NAMES[self.kind],
            'states': self.size,
            'exact': self.exact,
            'epsilon': str(self.epsilon),
            'tau': self.tau,
            'tv': [str(value) for value in self.tv],
            'monotone': all(later <= earlier for earlier, later in zip(self.tv, self.tv[1:])),
            'symmetric': self.is_symmetric(),
            'conductance': None if self.conductance is None else str(self.conductance),
            'degenerate': self.size == 1,
            'spectral_gap': None if self.size == 1 else f"{self.spectral_gap():.12g}",
        })


def transition_rows(states: Sequence[State]) -> List[Row]:
    """Exact rows of P as sparse dictionaries."""
    index = {state: i for i, state in enumerate(states)}
    rows = []
    for x, state in enumerate(states):
        reached, total = move_census(state)
        row: Row = {}
        for target, count in reached.items():
            row[index[target]] = Fraction(count, 2 * total)
        row[x] = 1 - sum(row.values())
        rows.append(row)
    return rows


def check_stationary(diagnostics: ChainDiagnostics):
    """The uniform distribution is stationary: every column of P sums to 1."""
    if diagnostics.exact:
        columns = [Fraction(0)] * diagnostics.size
        for row in diagnostics.rows:
            for y, p in row.items():
                columns[y] += p
        if any(total != 1 for total in columns):
            raise NumericError(f"Uniform distribution is not stationary for {spec_key(diagnostics.spec)}")
    else:
        columns = diagnostics.matrix().sum(axis=0)
        if np.max(np.abs(columns - 1)) > STATIONARY_TOLERANCE:
            raise NumericError(f"Uniform distribution is stationary only to {np.max(np.abs(columns - 1)):.3g} "
                               f"for {spec_key(diagnostics.spec)}")


def _exact_curve(rows: List[Row], epsilon) -> List[Fraction]:
    size = len(rows)
    target = Fraction(1, size)
    current = [[Fraction(int(x == y)) for y in range(size)] for x in range(size)]
    curve = []
    while True:
        distance = max(sum(abs(value - target) for value in row) for row in current) / 2
        curve.append(distance)
        if distance <= epsilon:
            return curve
        if len(curve) > MAX_TV_STEPS:
            raise NumericError(f"Distance {float(distance):.3g} still above {epsilon} after {MAX_TV_STEPS} steps")
        following = []
        for row in current:
            updated = [Fraction(0)] * size
            for z, weight in enumerate(row):
                if weight:
                    for y, p in rows[z].items():
                        updated[y] += weight * p
            following.append(updated)
        current = following


def _float_curve(matrix: np.ndarray, epsilon: float) -> List[float]:
    size = matrix.shape[0]
    current = np.eye(size)
    curve = []
    while True:
        distance = float(np.abs(current - 1 / size).sum(axis=1).max() / 2)
        curve.append(distance)
        if distance <= epsilon:
            return curve
        if len(curve) > MAX_TV_STEPS:
            raise NumericError(f"Distance {distance:.3g} still above {epsilon} after {MAX_TV_STEPS} steps")
        current = current @ matrix


def conductance(diagnostics: ChainDiagnostics) -> Tuple[Optional[object], Optional[int]]:
    """min over cuts T with pi(T) <= 1/2 of C[T, T-bar] / pi(T), and the minimising T as a mask."""
    size = diagnostics.size
    if size == 1:
        return None, None
    if size > MAX_CONDUCTANCE_STATES:
        raise CapacityError(f"Conductance is computed by enumerating cuts of at most {MAX_CONDUCTANCE_STATES} "
                            f"states", module='chain', limit=MAX_CONDUCTANCE_STATES)
    flow = diagnostics.matrix() / size
    outflow = flow.sum(axis=1)
    columns = np.arange(size)
    best_value, best_mask = None, None
    for start in range(1, 1 << size, CUT_CHUNK):
        masks = np.arange(start, min(start + CUT_CHUNK, 1 << size), dtype=np.int64)
        members = ((masks[:, None] >> columns) & 1).astype(float)
        weight = members.sum(axis=1) / size
        keep = weight <= 0.5 + STATIONARY_TOLERANCE
        if not keep.any():
            continue
        members, weight, masks = members[keep], weight[keep], masks[keep]
        cut = members @ outflow - ((members @ flow) * members).sum(axis=1)
        ratios = cut / weight
        index = int(np.argmin(ratios))
        if best_value is None or ratios[index] < best_value:
            best_value, best_mask = float(ratios[index]), int(masks[index])

    if not diagnostics.exact:
        return best_value, best_mask
    inside = [x for x in range(size) if best_mask >> x & 1]
    crossing = sum(diagnostics.probability(x, y) for x in inside for y in range(size) if not best_mask >> y & 1)
    return Fraction(crossing, len(inside)), best_mask


def diagnostics(spec: Spec, epsilon: float = 0.01, rational_states: int = RATIONAL_STATES,
                max_states: int = MAX_DIAGNOSTIC_STATES) -> ChainDiagnostics:
    """Transition matrix, distance curve, mixing time and conductance of the chain on spec."""
    states = enumerate_states(spec, limit=max_states)
    exact = len(states) <= rational_states
    result = ChainDiagnostics(spec, states, transition_rows(states), exact)
    check_stationary(result)
    if exact:
        result.epsilon = Fraction(str(epsilon))
        result.tv = _exact_curve(result.rows, result.epsilon)
    else:
        result.epsilon = epsilon
        result.tv = _float_curve(result.matrix(), epsilon)
    result.tau = len(result.tv) - 1

    if result.size <= MAX_CONDUCTANCE_STATES:
        result.conductance, _ = conductance(result)
    else:
        log.debug(f"{spec_key(spec)}: {result.size} states, conductance not enumerated")
    log.info(f"{spec_key(spec)}: {result.size} states, tau({epsilon}) = {result.tau}")
    return result


def mixing_bound(phi: float, size: int, epsilon: float) -> float:
    """(2 / phi^2) ln(1 / (epsilon pi_min)) for a lazy reversible chain with uniform pi."""
    return 2 / phi ** 2 * math.log(size / epsilon)
