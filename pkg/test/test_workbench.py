import csv
import io
import json
from unittest import mock

import pytest

from graphbench_core.config import CONFIG_ENV, WORKERS_ENV
from graphbench_core.graph.codec import write_graph
from graphbench_core.graph.graph import build_graph
from graphbench_core.run_workbench import EXIT_ERROR, EXIT_FALSIFIED, EXIT_OK, EXIT_VACUOUS, main
from graphbench_core.server_base import WorkbenchBase
from graphbench_core.verification.report import AggregateReport

from .builders import cycle_graph, path_graph


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
    monkeypatch.delenv(CONFIG_ENV, raising=False)
    monkeypatch.delenv(WORKERS_ENV, raising=False)


@pytest.fixture
def graph_file(tmp_path):
    def write(name, g):
        path = tmp_path / name
        write_graph(g, str(path))
        return str(path)
    return write


def run(*argv):
    stdout = io.StringIO()
    code = main(list(argv), stdout=stdout)
    return code, stdout.getvalue()


def test_list_claims():
    code, text = run('--list')
    assert code == EXIT_OK
    rows = [line.split('\t') for line in text.splitlines()]
    assert ['equitable-knn', 'bipartite'] in [row[:2] for row in rows]
    assert all(len(row) == 3 for row in rows)


def test_usage_errors():
    assert run()[0] == EXIT_ERROR
    assert run('no-such-command')[0] == EXIT_ERROR
    assert run('verify')[0] == EXIT_ERROR
    assert run('trees', 'enumerate')[0] == EXIT_ERROR


def test_indices(graph_file):
    code, text = run('indices', graph_file('p4.json', path_graph(4)))
    assert code == EXIT_OK
    result = json.loads(text)
    assert result['m1'] == {'value': '6', 'kind': 'exact', 'tolerance': 0, 'note': ''}
    assert result['hm1']['value'] == '34'
    assert result['so']['kind'] == 'real'


def test_indices_csv(graph_file):
    code, text = run('--format', 'csv', 'indices', graph_file('p4.g6', path_graph(4)), '--index', 'm2')
    assert code == EXIT_OK
    rows = list(csv.DictReader(io.StringIO(text)))
    assert len(rows) == 1
    assert rows[0]['m2.value'] == '10'


def test_indices_on_an_edgeless_graph(graph_file):
    path = graph_file('empty.json', build_graph(3, []))
    code, text = run('indices', path, '--all')
    assert code == EXIT_OK
    result = json.loads(text)
    assert len(result) == 9
    assert result['mkg']['kind'] == 'undefined'
    assert result['mkg']['value'] == ''
    assert 'edgeless' in result['mkg']['note']
    assert result['m1']['value'] == '0'
    assert result['hm2'] == {'value': '0', 'kind': 'exact', 'tolerance': 0, 'note': ''}

    code, text = run('indices', path, '--index', 'mkg')
    assert code == EXIT_OK
    assert json.loads(text)['mkg']['kind'] == 'undefined'

    assert run('indices', path, '--all', '--index', 'm1')[0] == EXIT_ERROR


def test_graph_order_past_limit(graph_file):
    assert run('indices', graph_file('p11.json', path_graph(11)))[0] == EXIT_ERROR


def test_trees_enumerate():
    code, text = run('trees', 'enumerate', '--n', '6', '--delta', '3')
    assert code == EXIT_OK
    result = json.loads(text)
    assert result['count'] == 3
    assert len(result['trees']) == 3


def test_competition_kappa():
    assert run('competition', 'kappa', '2', '2', '2') == (EXIT_OK, '2\n')
    assert run('competition', 'kappa', '2', '2')[0] == EXIT_ERROR


def test_cycle_bounds_exit_codes(graph_file):
    assert run('bip', 'cycles', graph_file('c4.json', cycle_graph(4)), '--bound', 'min-degree')[0] == EXIT_OK
    code, text = run('bip', 'cycles', graph_file('p4.json', path_graph(4)), '--bound', 'min-degree')
    assert code == EXIT_VACUOUS
    assert json.loads(text)['status'] == 'vacuous'
    assert run('bip', 'cycles', graph_file('c5.json', cycle_graph(5)))[0] == EXIT_ERROR


def test_verify():
    code, text = run('verify', '--claim', 'equitable-knn', '--max-n', '2', '--kmax', '4')
    assert code == EXIT_OK
    report = json.loads(text)
    assert report['status'] == 'verified'
    assert report['universe'] == 6

    assert run('verify', '--claim', 'equitable-knn', '--max-n', '0')[0] == EXIT_VACUOUS
    assert run('verify', '--claim', 'equitable-knn', '--max-n', '15')[0] == EXIT_ERROR
    assert run('verify', '--claim', 'no-such-claim')[0] == EXIT_ERROR


def test_verify_csv():
    code, text = run('--format', 'csv', 'verify', '--claim', 'equitable-knn', '--max-n', '1', '--kmax', '2')
    assert code == EXIT_OK
    rows = list(csv.DictReader(io.StringIO(text)))
    assert [row['kind'] for row in rows] == ['witness']
    assert rows[0]['key'] == 'n=1,k=2'
    assert rows[0]['status'] == 'verified'


def test_verify_several_claims():
    code, text = run('--workers', '2', 'verify-all', '--claim', 'equitable-knn', '--claim', 'chain-detailed-balance',
                     '--max-n', '2', '--kmax', '4', '--max-states', '50')
    assert code == EXIT_OK
    aggregate = json.loads(text)
    assert [summary['status'] for summary in aggregate['summaries']] == ['verified', 'verified']


def test_chain_sample(tmp_path):
    assert run('chain', 'sample', '--rows', '1,1', '--cols', '1,1')[0] == EXIT_ERROR

    target = tmp_path / 'run.ndjson'
    code, text = run('--seed', '3', '--output', str(target), 'chain', 'sample', '--rows', '1,1', '--cols', '1,1',
                     '--steps', '5')
    assert code == EXIT_OK
    assert text == ''
    lines = target.read_text().splitlines()
    assert [json.loads(line)['step'] for line in lines] == [1, 2, 3, 4, 5]

    again = tmp_path / 'again.ndjson'
    run('--seed', '3', '--output', str(again), 'chain', 'sample', '--rows', '1,1', '--cols', '1,1', '--steps', '5')
    assert again.read_text() == target.read_text()


def test_chain_diag():
    code, text = run('chain', 'diag', '--rows', '1,1', '--cols', '1,1')
    assert code == EXIT_OK
    result = json.loads(text)
    assert result['states'] == 2
    assert result['tau'] == 6


def test_config_file(tmp_path):
    config = tmp_path / 'bench.yml'
    config.write_text("format: csv\n")
    code, text = run('--config', str(config), 'competition', 'bounds', '2', '2', '2')
    assert code == EXIT_OK
    assert text.startswith('formula,lower,parts,upper\n')


def test_falsified_claims_exit_status():
    falsified = AggregateReport({'summaries': [
        {'claim_id': 'equitable-knn', 'anchor': 'anchor', 'module': 'bipartite', 'status': 'verified'},
        {'claim_id': 'bihole-threshold', 'anchor': 'anchor', 'module': 'bipartite', 'status': 'falsified'},
    ]})
    with mock.patch('graphbench_core.run_workbench.verify_all', return_value=falsified) as verify_all:
        code, text = run('verify-all', '--max-n', '4')
    assert code == EXIT_FALSIFIED
    assert json.loads(text)['summaries'][1]['status'] == 'falsified'
    assert verify_all.call_args[0][0] == {'max_n': 4}


def test_hard_stop_ends_the_process(config):
    workbench = WorkbenchBase('graphbench.test', shutdown_timeout=5, config=config)
    with mock.patch('graphbench_core.server_base.time.sleep') as sleep, \
            mock.patch('graphbench_core.server_base.os._exit') as hard_exit, \
            mock.patch.object(workbench, 'is_alive', return_value=True):
        workbench._WorkbenchBase__stop()
    sleep.assert_called_once_with(5)
    hard_exit.assert_called_once_with(1)


def test_hard_stop_skipped_once_finished(config):
    workbench = WorkbenchBase('graphbench.test', shutdown_timeout=5, config=config)
    workbench.run()
    with mock.patch('graphbench_core.server_base.time.sleep'), \
            mock.patch('graphbench_core.server_base.os._exit') as hard_exit, \
            mock.patch.object(workbench, 'is_alive', return_value=True), \
            mock.patch.object(workbench.log, 'error') as error:
        workbench._WorkbenchBase__stop()
    hard_exit.assert_not_called()
    error.assert_not_called()
