"""
Verification reports and the tallies they are built from.

A tally is the partial result of checking part of a claim's universe.  Tallies merge
associatively; the report sorts its instances by key so the merged output does not depend
on how the universe was partitioned.
"""
from typing import Dict, List, Optional

from assemblyline import odm

VERIFIED = 'verified'
FALSIFIED = 'falsified'
VACUOUS = 'vacuous'
ERROR = 'error'
STATUSES = [VERIFIED, FALSIFIED, VACUOUS]

MAX_WITNESSES = 25


@odm.model()
class Instance(odm.Model):
    key = odm.Keyword()                                 # canonical code in hex, or the instance parameters
    details = odm.Mapping(odm.Keyword(), default={})    # witness data, values rendered as text


@odm.model()
class VerificationReport(odm.Model):
    claim_id = odm.Keyword()
    anchor = odm.Text()
    module = odm.Keyword()
    status = odm.Enum(values=STATUSES)
    universe = odm.Integer(default=0)       # instances scanned
    qualifying = odm.Integer(default=0)     # instances meeting the claim's hypotheses
    counterexamples = odm.List(odm.Compound(Instance), default=[])
    witnesses = odm.List(odm.Compound(Instance), default=[])
    params = odm.Mapping(odm.Keyword(), default={})
    notes = odm.List(odm.Text(), default=[])


def _text(value) -> str:
    return str(value) or '-'


def instance(key: str, **details) -> dict:
    """Detail names follow the odm mapping key rules: lowercase, at least two characters."""
    return {'key': key, 'details': {name: _text(value) for name, value in details.items()}}


class ClaimTally:
    def __init__(self):
        self.universe = 0
        self.qualifying = 0
        self.counterexamples: List[dict] = []
        self.witnesses: List[dict] = []
        self.notes: List[str] = []

    def scanned(self, qualifies: bool = True):
        self.universe += 1
        if qualifies:
            self.qualifying += 1

    def fail(self, key: str, **details):
        self.counterexamples.append(instance(key, **details))

    def witness(self, key: str, **details):
        self.witnesses.append(instance(key, **details))

    def note(self, text: str):
        if text not in self.notes:
            self.notes.append(text)

    def merge(self, other: 'ClaimTally') -> 'ClaimTally':
        merged = ClaimTally()
        merged.universe = self.universe + other.universe
        merged.qualifying = self.qualifying + other.qualifying
        merged.counterexamples = self.counterexamples + other.counterexamples
        merged.witnesses = self.witnesses + other.witnesses
        merged.notes = list(self.notes)
        for text in other.notes:
            merged.note(text)
        return merged

    @property
    def status(self) -> str:
        if self.counterexamples:
            return FALSIFIED
        if self.qualifying == 0:
            return VACUOUS
        return VERIFIED

    def report(self, claim_id: str, anchor: str, module: str, params: Optional[Dict] = None) -> VerificationReport:
        witnesses = sorted(self.witnesses, key=lambda item: item['key'])[:MAX_WITNESSES]
        return VerificationReport({
            'claim_id': claim_id,
            'anchor': anchor,
            'module': module,
            'status': self.status,
            'universe': self.universe,
            'qualifying': self.qualifying,
            'counterexamples': sorted(self.counterexamples, key=lambda item: item['key']),
            'witnesses': witnesses,
            'params': {name: _text(value) for name, value in (params or {}).items()},
            'notes': sorted(self.notes),
        })


@odm.model()
class ClaimSummary(odm.Model):
    claim_id = odm.Keyword()
    anchor = odm.Text()
    module = odm.Keyword()
    status = odm.Enum(values=STATUSES + [ERROR])
    message = odm.Optional(odm.Text())     # set when the checker raised


@odm.model()
class AggregateReport(odm.Model):
    summaries = odm.List(odm.Compound(ClaimSummary), default=[])
    reports = odm.List(odm.Compound(VerificationReport), default=[])


def aggregate_status(aggregate: AggregateReport) -> str:
    """Falsified beats error beats verified; vacuous only when nothing else occurred."""
    statuses = {summary.status for summary in aggregate.summaries}
    for status in (FALSIFIED, ERROR, VERIFIED):
        if status in statuses:
            return status
    return VACUOUS
