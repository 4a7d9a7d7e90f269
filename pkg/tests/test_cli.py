import json
import signal

import pytest

from strengthlab.cli import (
    EXIT_BUDGET,
    EXIT_EMPTY_GRAPH,
    EXIT_INPUT,
    EXIT_INTERRUPTED,
    EXIT_OK,
)


def _run(cli, capsys, *args):
    code = cli.run(list(args))
    return code, capsys.readouterr().out


def _run_json(cli, capsys, *args):
    code, out = _run(cli, capsys, *args)
    assert code == EXIT_OK
    return json.loads(out)


def test_strength_from_edge_list(cli, capsys):
    report = _run_json(cli, capsys, 'strength', '--edges', '3;1 2;1 3')
    assert report['strength'] == 4
    assert report['complement_strength'] == 3
    assert sorted(report['witness']) == [1, 2, 3]
    assert report['lower_bound'] == 4
    assert report['upper_bound'] == 4
    assert 'brute_force_strength' in report


def test_strength_from_graph6(cli, capsys):
    report = _run_json(cli, capsys, 'strength', '--graph6', 'Bw')
    assert report['graph6'] == 'Bw'
    assert report['strength'] == 5
    assert report['complement_strength'] is None


def test_strength_both_methods(cli, capsys):
    report = _run_json(
        cli, capsys, 'strength', '--edges', '5;1 2;1 3;2 3;4 5', '--method', 'both'
    )
    assert report['strength'] == report['brute_force_strength'] == 7
    assert report['agreement'] is True


def test_empty_graph(cli, capsys):
    code, out = _run(cli, capsys, 'strength', '--edges', '3')
    assert code == EXIT_EMPTY_GRAPH
    assert out == ''

    report = _run_json(cli, capsys, 'strength', '--edges', '3', '--allow-empty-report')
    assert report['strength'] is None
    assert report['complement_strength'] == 5


@pytest.mark.parametrize(
    'args',
    [
        ['strength', '--graph6', '~~'],
        ['strength', '--edges', '3;1 4'],
        ['strength', '--edges', '3;1 2', '--graph6', 'Bw'],
        ['ramsey', '--s', '3'],
        ['fmax', '--n', '4', '--threads', '0'],
        ['verify', '--suite', 'everything'],
        ['strength', '--edges', '3;1 2', '--config', 'missing.yml'],
    ],
)
def test_invalid_input_exits_with_input_code(cli, capsys, args):
    code, out = _run(cli, capsys, *args)
    assert code == EXIT_INPUT
    assert out == ''


def test_ramsey(cli, capsys):
    record = _run_json(cli, capsys, 'ramsey', '--s', '3', '--t', '5', '-j', '1')
    assert record['status'] == 'exact'
    assert record['value'] == 5
    assert 'elapsed' not in record


def test_ramsey_names_the_witness(cli, capsys):
    record = _run_json(cli, capsys, 'ramsey', '--s', '4', '--t', '4', '-j', '1', '--timing')
    assert record['value'] == 7
    assert record['witness_family'] == 'K_{3,3}'
    assert record['classes_examined'] == 1044
    assert record['elapsed'] >= 0


def test_fmax(cli, capsys):
    report = _run_json(cli, capsys, 'fmax', '--n', '4', '-j', '1', '--witnesses')
    assert report['value'] == 11
    assert report['classes_examined'] == 11


def test_budget_errors_exit_with_budget_code(cli, capsys):
    assert cli.run(['fmax', '--n', '10', '-j', '1']) == EXIT_BUDGET
    assert cli.run(['tables', '--which', '4', '--to', '40']) == EXIT_BUDGET
    assert cli.run(['enumerate', '--n', '11']) == EXIT_BUDGET


def test_table_of_sigma_ranges_as_csv(cli, capsys):
    code, out = _run(cli, capsys, 'tables', '--which', '3', '--format', 'csv')
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0] == 'n,sigma,reason'
    assert lines[1] == '"[3, 5]",4,"r(3, 3) = 6"'
    assert len(lines) == 7


def test_table_of_small_ramsey_values(cli, capsys):
    rows = _run_json(cli, capsys, 'tables', '--which', '1')
    assert rows[0] == {'s': 2, 't': 2, 'value': 2}
    assert rows[-1] == {'s': 4, 't': 7, 'value': 13}


def test_bounds_table_as_markdown(cli, capsys):
    code, out = _run(
        cli, capsys, 'tables', '--which', '4', '--from', '10', '--to', '12', '--format', 'md'
    )
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0].split('|')[1].strip() == 'n'
    assert len(lines) == 5


def test_verify(cli, capsys):
    reports = _run_json(cli, capsys, 'verify', '--suite', 'strength', '--max-order', '5', '-j', '1')
    assert reports['suite'] == 'strength'
    assert reports['passed'] is True


def test_enumerate(cli, capsys):
    rows = _run_json(cli, capsys, 'enumerate', '--n', '4', '--count')
    assert rows == [{'n': 4, 'shard': 0, 'shard_count': 1, 'classes': 11}]

    code, out = _run(cli, capsys, 'enumerate', '--n', '3')
    assert code == EXIT_OK
    assert len(out.splitlines()) == 4


def test_output_goes_through_the_file_system(cli, file_system, capsys, tmp_path):
    target = tmp_path / 'fmax.json'
    code, out = _run(cli, capsys, 'fmax', '--n', '3', '-j', '1', '-o', str(target))
    assert code == EXIT_OK
    assert out == ''
    (path, content), = file_system.writes
    assert str(path) == str(target)
    assert json.loads(content)['value'] == 7


def test_repeated_runs_give_identical_output(cli, capsys):
    args = ('fmax', '--n', '5', '-j', '2')
    assert _run(cli, capsys, *args) == _run(cli, capsys, *args)


def test_resolve_config_precedence(cli, tmp_path):
    path = tmp_path / 'lab.yml'
    path.write_text('budget:\n  max_fmax_order: 8\nrun:\n  workers: 3\n  shard_count: 5\n')
    args = cli.parse_args(
        ['fmax', '--n', '4', '--preset', 'extended', '--config', str(path), '-j', '2']
    )
    config = cli.resolve_config(args)
    assert config.budget.max_enum_order == 12
    assert config.budget.max_fmax_order == 8
    assert config.run.workers == 2
    assert config.run.shard_count == 5
    assert config.run.output_format == 'json'


def test_first_signal_asks_the_search_to_stop(cli, caplog):
    assert not cli.shutdown_requested
    cli._request_stop(signal.SIGINT, None)
    assert cli.shutdown_requested
    assert 'SIGINT received' in caplog.text

    with pytest.raises(SystemExit) as exit_info:
        cli._request_stop(signal.SIGTERM, None)
    assert exit_info.value.code == EXIT_INTERRUPTED
    assert 'SIGTERM again' in caplog.text


def test_argument_and_graph_errors_are_logged_apart(cli, caplog):
    cli.run(['ramsey', '--s', '3'])
    assert 'Bad arguments' in caplog.text
    cli.run(['strength', '--graph6', '~~'])
    assert 'Rejected graph or cursor input' in caplog.text
