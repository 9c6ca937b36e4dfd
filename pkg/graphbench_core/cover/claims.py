"""
Checkers for the covering claims on relations K in S x T.

Each instance check works on one relation and a tally, so the same code serves the claim
sweeps and verify_covering on a single relation.
"""
from itertools import product
from typing import List

import numpy as np

from graphbench_core.cover.decomposition import EMPTY, INADMISSIBLE, canonical_decomposition
from graphbench_core.cover.meps import (enumerate_meps, exterior_dimension, inadmissible_edges, interior_dimension,
                                        max_disjoint_subgraph)
from graphbench_core.cover.relation import ExteriorPair, RelationGraph, popcount, random_relation
from graphbench_core.verification.registry import claim, get_claim
from graphbench_core.verification.report import ClaimTally, VerificationReport
from graphbench_core.verification.sweep import Sweeper

EXHAUSTIVE_CELLS = 9
INTERIOR_NOTE = ("I of the complement is read as its interior dimension; the count of inadmissible edges of the "
                 "complement is reported beside it")
REGIONS_NOTE = "R2 holds exactly the inadmissible edges, the edges lying in some A x B of a minimal pair"


def relation_universe(params: dict) -> List[RelationGraph]:
    """Every relation with at most EXHAUSTIVE_CELLS cells, then seeded random ones up to max_p x max_q."""
    universe = []
    for p in range(1, params['max_p'] + 1):
        for q in range(1, params['max_q'] + 1):
            if p * q > EXHAUSTIVE_CELLS:
                continue
            for cells in product((False, True), repeat=p * q):
                universe.append(RelationGraph.from_matrix(np.array(cells, dtype=bool).reshape(p, q)))
    rng = np.random.default_rng(params.get('seed'))
    for _ in range(params.get('samples') or 0):
        p = int(rng.integers(1, params['max_p'] + 1))
        q = int(rng.integers(1, params['max_q'] + 1))
        universe.append(random_relation(p, q, rng))
    return universe


def brute_force_dimension(k: RelationGraph) -> int:
    """Smallest |A| + |B| by trying every A with its forced B."""
    return min(popcount(a) + popcount(k.neighbourhood(k.full_s & ~a)) for a in range(1 << k.p))


def check_duality(k: RelationGraph, tally: ClaimTally):
    tally.scanned()
    dimension, pair = exterior_dimension(k)
    matching = max_disjoint_subgraph(k)
    oracle = brute_force_dimension(k)
    disjoint = len({s for s, _ in matching}) == len({t for _, t in matching}) == len(matching)
    if not (dimension == len(matching) == oracle == pair.weight and pair.covers(k) and disjoint):
        tally.fail(k.key(), dimension=dimension, matching=len(matching), oracle=oracle, weight=pair.weight)


def check_identity(k: RelationGraph, tally: ClaimTally):
    tally.scanned()
    oriented = k if k.p <= k.q else k.transpose()
    p, q = oriented.p, oriented.q
    dimension, _ = exterior_dimension(oriented)
    complement = oriented.complement()
    interior = interior_dimension(complement)
    inadmissible = len(inadmissible_edges(complement))
    if dimension < p:
        holds = dimension + interior == p + q
    else:
        proper = any(pair.a != oriented.full_s and pair.b != oriented.full_t for pair in enumerate_meps(oriented))
        total = dimension + interior
        holds = total <= p + q and (total == p + q) == proper
    if holds:
        tally.witness(k.key(), dimension=dimension, interior=interior, inadmissible_count=inadmissible)
    else:
        tally.fail(k.key(), dimension=dimension, interior=interior, inadmissible_count=inadmissible, sides=(p, q))
    tally.note(INTERIOR_NOTE)


def check_chain(k: RelationGraph, tally: ClaimTally):
    tally.scanned()
    decomposition = canonical_decomposition(k)
    alpha = set(decomposition.chain())
    beta = enumerate_meps(k)
    gamma = set(decomposition.lattice())
    smallest_a = min(beta, key=lambda pair: (popcount(pair.a), pair.a))
    largest_a = max(beta, key=lambda pair: (popcount(pair.a), pair.a))
    # A_* lies inside every A and every A inside A^*
    extremal = (decomposition.lower == smallest_a and decomposition.upper == largest_a
                and all(decomposition.lower.a & ~pair.a == 0 and pair.a & ~decomposition.upper.a == 0
                        for pair in beta))
    if alpha <= set(beta) <= gamma and extremal:
        tally.witness(k.key(), blocks=len(decomposition.blocks), beta=len(beta))
    else:
        tally.fail(k.key(), alpha=len(alpha), beta=len(beta), gamma=len(gamma), extremal=extremal)


def check_blocks(k: RelationGraph, tally: ClaimTally):
    tally.scanned()
    tally.note(REGIONS_NOTE)
    decomposition = canonical_decomposition(k)
    classes = decomposition.classify_edges()
    if classes[EMPTY]:
        tally.fail(k.key(), reason='edge in the empty region', edges=classes[EMPTY])
        return
    if sorted(classes[INADMISSIBLE]) != inadmissible_edges(k):
        tally.fail(k.key(), reason='inadmissible edges', region=classes[INADMISSIBLE])
        return
    for block in decomposition.block_relations():
        trivial = sorted([ExteriorPair(block.full_s, 0), ExteriorPair(0, block.full_t)])
        if enumerate_meps(block) != trivial:
            tally.fail(k.key(), reason='reducible block', block=block.key())
            return
    # The end pieces have the single pairs (A_*, 0) and (0, B_*)
    ends = ((decomposition.lower.a, k.full_t & ~decomposition.lower.b, True),
            (k.full_s & ~decomposition.upper.a, decomposition.upper.b, False))
    for s_mask, t_mask, s_side in ends:
        if not s_mask or not t_mask:
            continue
        piece = k.restrict(s_mask, t_mask)
        only = ExteriorPair(piece.full_s, 0) if s_side else ExteriorPair(0, piece.full_t)
        if enumerate_meps(piece) != [only]:
            tally.fail(k.key(), reason='reducible end piece', piece=piece.key())
            return
    tally.witness(k.key(), blocks=len(decomposition.blocks))


COVERING_CHECKS = {
    'identity': ('covering-identity', check_identity),
    'chain': ('mep-chain', check_chain),
    'blocks': ('irreducible-blocks', check_blocks),
}


def verify_covering(which: str, k: RelationGraph) -> VerificationReport:
    """Check one covering claim on a single relation."""
    if which not in COVERING_CHECKS:
        raise ValueError(f"Unknown covering claim {which}, expected one of {sorted(COVERING_CHECKS)}")
    claim_id, check = COVERING_CHECKS[which]
    tally = ClaimTally()
    check(k, tally)
    return tally.report(claim_id, get_claim(claim_id).anchor, 'cover', {'relation': k.key()})


def _sweep(check):
    def checker(params: dict, sweeper: Sweeper) -> ClaimTally:
        return sweeper.sweep(relation_universe(params), check)
    return checker


COVER_DEFAULTS = dict(max_p=6, max_q=6, samples=10000, seed=11)

check_konig_duality = claim(
    'konig-duality', anchor="a disjoint graph with finite exterior dimension E(K*) must have exactly E(K*) edges; "
                            "E(K) = E(K*)", module='cover', **COVER_DEFAULTS
)(_sweep(check_duality))

check_covering_identity = claim(
    'covering-identity', anchor="if E(K) < p, then E(K) + I(K-bar) = p + q; if E(K) = p, then E(K) + I(K-bar) <= "
                                "p + q, with equality iff K admits an m.e.p. [A,B] with A != S and B != T",
    module='cover', **COVER_DEFAULTS
)(_sweep(check_identity))

check_mep_chain = claim(
    'mep-chain', anchor="alpha is contained in beta, which is contained in gamma", module='cover', **COVER_DEFAULTS
)(_sweep(check_chain))

check_irreducible_blocks = claim(
    'irreducible-blocks', anchor="the subgraphs K cap (A_* x B-bar^*) and K cap (A-bar^* x B_*) are irreducible; "
                                 "K cap R3 is empty", module='cover', **COVER_DEFAULTS
)(_sweep(check_blocks))
