from graphbench_core.verification.registry import claim, get_claim, list_claims, verify, verify_all
from graphbench_core.verification.report import (ERROR, FALSIFIED, VACUOUS, VERIFIED, AggregateReport, ClaimTally,
                                                 VerificationReport, aggregate_status)
from graphbench_core.verification.sweep import Sweeper

__all__ = ['ERROR', 'FALSIFIED', 'VACUOUS', 'VERIFIED', 'AggregateReport', 'ClaimTally', 'Sweeper',
           'VerificationReport', 'aggregate_status', 'claim', 'get_claim', 'list_claims', 'verify', 'verify_all']
