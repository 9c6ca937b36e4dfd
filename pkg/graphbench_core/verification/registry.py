"""
Registry of checkable claims.

Each claim module registers its checkers with the @claim decorator when imported.  A checker
receives the merged parameters and a Sweeper and returns a ClaimTally.
"""
import importlib
import logging
from collections import OrderedDict, namedtuple
from typing import Callable, Dict, List, Optional

from graphbench_core.config import MODULE_LIMITS, Caps, validate_caps
from graphbench_core.errors import GraphbenchError, UnknownClaimError
from graphbench_core.verification.report import ERROR, FALSIFIED, AggregateReport, VerificationReport
from graphbench_core.verification.sweep import Sweeper

log = logging.getLogger('graphbench.verification')

CLAIM_MODULES = [
    'graphbench_core.trees.claims',
    'graphbench_core.bipartite.claims',
    'graphbench_core.cover.claims',
    'graphbench_core.competition.claims',
    'graphbench_core.chain.claims',
]

Claim = namedtuple('Claim', ['claim_id', 'anchor', 'module', 'defaults', 'checker'])

CLAIMS: Dict[str, Claim] = OrderedDict()


def claim(claim_id: str, anchor: str, module: str, **defaults):
    def register(checker: Callable):
        CLAIMS[claim_id] = Claim(claim_id, anchor, module, defaults, checker)
        return checker
    return register


def load_claims() -> Dict[str, Claim]:
    for name in CLAIM_MODULES:
        importlib.import_module(name)
    return CLAIMS


def list_claims() -> List[Claim]:
    return list(load_claims().values())


def get_claim(claim_id: str) -> Claim:
    try:
        return load_claims()[claim_id]
    except KeyError:
        raise UnknownClaimError(claim_id)


def claim_params(entry: Claim, params: Optional[dict] = None) -> dict:
    merged = dict(entry.defaults)
    merged.update({name: value for name, value in (params or {}).items() if value is not None})
    caps = {name: merged[name] for name in MODULE_LIMITS.get(entry.module, {}) if merged.get(name) is not None}
    validate_caps(Caps(caps), entry.module)
    return merged


def verify(claim_id: str, params: Optional[dict] = None, sweeper: Optional[Sweeper] = None) -> VerificationReport:
    entry = get_claim(claim_id)
    merged = claim_params(entry, params)
    tally = entry.checker(merged, sweeper or Sweeper())
    report = tally.report(entry.claim_id, entry.anchor, entry.module, merged)

    log.info(f"{claim_id}: {report.status} ({report.qualifying}/{report.universe} instances qualified)")
    if report.status == FALSIFIED:
        for item in report.counterexamples:
            log.warning(f"{claim_id}: counterexample {item.key} {dict(item.details)}")
    return report


def verify_all(params: Optional[dict] = None, sweeper: Optional[Sweeper] = None,
               claim_ids: Optional[List[str]] = None) -> AggregateReport:
    """Run every registered claim, or the given ones; a claim that raises is summarised as an error."""
    entries = list_claims() if claim_ids is None else [get_claim(claim_id) for claim_id in claim_ids]
    summaries, reports = [], []
    for entry in entries:
        if sweeper is not None and not sweeper.running():
            break
        try:
            report = verify(entry.claim_id, params, sweeper)
        except GraphbenchError as error:
            log.error(f"{entry.claim_id}: {error}")
            summaries.append({'claim_id': entry.claim_id, 'anchor': entry.anchor, 'module': entry.module,
                              'status': ERROR, 'message': str(error)})
            continue
        reports.append(report.as_primitives())
        summaries.append({'claim_id': entry.claim_id, 'anchor': entry.anchor, 'module': entry.module,
                          'status': report.status})
    return AggregateReport({'summaries': summaries, 'reports': reports})
