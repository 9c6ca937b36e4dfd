import pytest

from graphbench_core.bipartite.claims import EMBEDDING_NOTE
from graphbench_core.competition.claims import ADMISSIBLE_NOTE, NEIGHBOURHOOD_NOTE
from graphbench_core.cover.claims import INTERIOR_NOTE, REGIONS_NOTE
from graphbench_core.trees.claims import CROSS_ORDER_NOTE
from graphbench_core.verification.registry import get_claim, list_claims, verify
from graphbench_core.verification.report import FALSIFIED, VACUOUS, VERIFIED
from graphbench_core.verification.sweep import Sweeper

SMALL_RELATIONS = {'max_p': 2, 'max_q': 2, 'samples': 0}
SMALL_CHAINS = {'max_n': 2, 'players': 4}

# (claim, params, status, universe, qualifying)
CLAIM_COUNTS = [
    ('spider-leg-reduction', {'max_n': 6}, VERIFIED, 6, 1),
    ('hm1-lower-bound', {'max_n': 6}, VERIFIED, 8, 8),
    ('hm2-lower-bound', {'max_n': 6}, VERIFIED, 8, 8),
    ('end-support-reduction', {'max_n': 6}, VERIFIED, 7, 1),
    ('support-vertex-reduction', {'max_n': 6}, VERIFIED, 7, 1),
    ('cross-order-hyper-zagreb', {'max_n': 6}, VACUOUS, 14, 0),
    ('exp-hyper-zagreb-reduction', {'max_n': 6}, VERIFIED, 7, 1),
    ('mkg-branch-reduction', {'max_n': 6}, VERIFIED, 7, 1),
    ('exp-mkg-branch-reduction', {'max_n': 6}, VERIFIED, 7, 1),
    ('mkg-starlike-reduction', {'max_n': 6}, VERIFIED, 6, 1),
    ('mkg-lower-bound', {'max_n': 5, 'graphs_max_n': 5}, VERIFIED, 2, 2),
    ('alternating-greedy-first', {'max_n': 5}, VERIFIED, 6, 4),
    ('majorization-last-order', {'max_n': 5}, VERIFIED, 4, 4),
    ('p4-sixth-moment', {'max_n': 6}, VERIFIED, 1, 1),
    ('max-f-mid-density', {'max_n': 7}, VERIFIED, 7, 6),
    ('max-f-high-density', {'max_n': 7}, VERIFIED, 5, 3),
    ('equitable-knn', {'max_n': 3, 'kmax': 4}, VERIFIED, 9, 9),
    ('equitable-delta-coloring', {'max_n': 4}, VERIFIED, 5, 3),
    ('equitable-tree-bound', {'max_n': 4}, VERIFIED, 4, 4),
    ('equitable-sparse-bound', {'max_n': 4}, VERIFIED, 5, 4),
    ('cycle-length-bound', {'max_n': 4, 'samples': 0}, VERIFIED, 5, 1),
    ('edge-count-bound', {'max_n': 4}, VERIFIED, 15, 1),
    ('long-cycle-min-degree', {'max_n': 4}, VERIFIED, 5, 1),
    ('b-spanning-path', {'max_n': 4}, VACUOUS, 5, 0),
    ('redundant-tree-embedding', {'max_n': 4, 'kmax': 1, 'tree_n': 2}, VERIFIED, 10, 2),
    ('unmixed-characterization', {'max_side': 2}, VERIFIED, 8, 4),
    ('bihole-threshold', {'max_n': 2, 'max_delta': 1}, VERIFIED, 4, 4),
    ('konig-duality', SMALL_RELATIONS, VERIFIED, 26, 26),
    ('covering-identity', SMALL_RELATIONS, VERIFIED, 26, 26),
    ('mep-chain', SMALL_RELATIONS, VERIFIED, 26, 26),
    ('irreducible-blocks', SMALL_RELATIONS, VERIFIED, 26, 26),
    ('tripartite-kappa', {'max_n': 4}, VERIFIED, 2, 2),
    ('tripartite-clique-cover', {'max_n': 4}, VERIFIED, 2, 2),
    ('multipartite-bounds', {'max_n': 4}, VERIFIED, 7, 7),
    ('clique-cover-lower-bound', {'max_n': 4}, VERIFIED, 7, 7),
    ('chain-detailed-balance', SMALL_CHAINS, VERIFIED, 19, 19),
    ('chain-irreducible', SMALL_CHAINS, VERIFIED, 19, 19),
    ('chain-uniform-sampling', dict(SMALL_CHAINS, steps=20000, sigmas=5.0), VERIFIED, 5, 5),
    ('tv-monotone', SMALL_CHAINS, VERIFIED, 5, 5),
    ('conductance-mixing-bound', SMALL_CHAINS, VERIFIED, 5, 5),
]


@pytest.mark.parametrize("claim_id, params, status, universe, qualifying", CLAIM_COUNTS,
                         ids=[row[0] for row in CLAIM_COUNTS])
def test_claim_counts(claim_id, params, status, universe, qualifying):
    report = verify(claim_id, params)
    assert report.status == status
    assert report.universe == universe
    assert report.qualifying == qualifying
    assert report.counterexamples == []


def test_every_claim_has_a_count():
    covered = {row[0] for row in CLAIM_COUNTS}
    covered.update({'degree-swap-order', 'f-index-upper-bound', 'max-f-low-density-shape'})
    assert covered == {entry.claim_id for entry in list_claims()}


def test_workers_do_not_change_counts():
    single = verify('hm1-lower-bound', {'max_n': 7}).as_primitives()
    several = verify('hm1-lower-bound', {'max_n': 7}, Sweeper(3)).as_primitives()
    assert single == several
    assert (single['universe'], single['qualifying']) == (18, 18)


def test_hyper_zagreb_equality_cases():
    report = verify('hm1-lower-bound', {'max_n': 6})
    legs = sorted(item.as_primitives()['details']['legs'] for item in report.witnesses)
    # stars of order 4, 5 and 6, then one spider per class with a single long leg
    assert legs == ['(1, 1, 1)', '(1, 1, 1, 1)', '(1, 1, 1, 1, 1)', '(2, 1, 1)', '(2, 1, 1, 1)', '(3, 1, 1)']


def test_spider_leg_reduction_witness():
    report = verify('spider-leg-reduction', {'max_n': 6})
    details = report.witnesses[0].as_primitives()['details']
    assert details['legs'] == '(2, 2, 1)'
    assert details['better_legs'] == '(3, 1, 1)'


def test_degree_swap_order():
    report = verify('degree-swap-order', {'max_n': 8})
    assert report.status == VERIFIED
    assert report.counterexamples == []
    assert 0 < report.qualifying <= report.universe


def test_forgotten_index_bound_fails_only_at_the_exceptional_pairs():
    report = verify('f-index-upper-bound', {'max_n': 7}).as_primitives()
    assert report['status'] == FALSIFIED
    # connected graphs of order 6 and 7; the complete graphs have no (k, a)
    assert (report['universe'], report['qualifying']) == (112 + 853, 111 + 852)
    pairs = {(item['details']['order'], item['details']['edges']) for item in report['counterexamples']}
    assert pairs == {('6', '11'), ('7', '16'), ('7', '17')}


def test_low_density_shape_fails_everywhere():
    report = verify('max-f-low-density-shape', {'max_n': 7}).as_primitives()
    assert report['status'] == FALSIFIED
    assert report['universe'] == report['qualifying'] == len(report['counterexamples']) == 9
    labels = {item['key'].split(':')[0]: item['details']['degrees'] for item in report['counterexamples']}
    assert set(labels) == {f"n=6,m={m}" for m in range(6, 10)} | {f"n=7,m={m}" for m in range(7, 12)}
    assert labels['n=6,m=6'] == '5/2/2/1/1/1'


def test_density_exceptions_are_reported():
    report = verify('max-f-mid-density', {'max_n': 7}).as_primitives()
    exceptions = [item['key'] for item in report['witnesses'] if item['details'].get('exception') == 'yes']
    assert exceptions == ['n=6,m=11']
    assert len(report['witnesses']) == 7


def test_claim_notes():
    assert CROSS_ORDER_NOTE in verify('cross-order-hyper-zagreb', {'max_n': 5}).notes
    assert EMBEDDING_NOTE in verify('redundant-tree-embedding', {'max_n': 4, 'kmax': 1, 'tree_n': 2}).notes
    assert INTERIOR_NOTE in verify('covering-identity', SMALL_RELATIONS).notes
    assert REGIONS_NOTE in verify('irreducible-blocks', SMALL_RELATIONS).notes
    assert NEIGHBOURHOOD_NOTE in verify('clique-cover-lower-bound', {'max_n': 4}).notes


def test_balanced_bounds_record_admissibility():
    assert ADMISSIBLE_NOTE in verify('multipartite-bounds', {'max_n': 4}).notes


@pytest.mark.parametrize("claim_id, cap, value", [
    ('hm1-lower-bound', 'max_n', 12),
    ('hm2-lower-bound', 'max_n', 12),
    ('alternating-greedy-first', 'max_n', 12),
    ('degree-swap-order', 'max_n', 9),
    ('f-index-upper-bound', 'max_n', 8),
    ('konig-duality', 'max_p', 6),
    ('konig-duality', 'samples', 10000),
    ('chain-uniform-sampling', 'steps', 1000000),
    ('chain-uniform-sampling', 'sigmas', 3.0),
    ('chain-uniform-sampling', 'max_states', 50),
])
def test_default_scale(claim_id, cap, value):
    assert get_claim(claim_id).defaults[cap] == value
