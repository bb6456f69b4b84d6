import json

import pytest

from hypertype import cli
from hypertype.cli import execute, main, parse_bindings, to_text
from hypertype.config import get_settings
from hypertype.errors import UsageError


def run_json(capsys, *argv):
    code = main(list(argv) + ['--format', 'json'])
    return code, json.loads(capsys.readouterr().out)


def test_eval_json(capsys):
    code, report = run_json(capsys, 'eval', '2f1', 'a=1', 'b=1', 'c=2', 'z=0.5')
    assert code == 0
    assert report['schema'] == 1
    assert report['command'] == 'eval'
    assert report['status'] == 'Converged'
    assert report['value'].startswith('1.386294361119')


def test_eval_text(capsys):
    assert main(['eval', '2f1', 'a=1', 'b=1', 'c=2', 'z=0.5']) == 0
    out = capsys.readouterr().out
    assert 'status: Converged' in out
    assert 'value: 1.386294361119' in out
    assert 'schema' not in out


def test_eval_with_kind_and_derivatives():
    code, report, _ = execute(['eval', '2f1', 'alpha=0.3', 'beta=-0.2', 'mu=0.1', 'z=0.7+0.2i',
                               '--kind', 'At1Index0', '--derivatives', '2'])
    assert code == 0
    assert report['kind'] == '2f1:At1Index0'
    assert len(report['derivatives']) == 2


def test_eval_hermite_defaults_to_the_even_solution():
    _, report, _ = execute(['eval', 'hermite', 'lam=0.3', 'z=0.5'])
    assert report['kind'] == 'hermite:Even'


def test_poly_hermite(capsys):
    code, report = run_json(capsys, 'poly', 'hermite', 'n=3')
    assert code == 0
    assert report['coefficients'] == ['0', '-2', '0', '4/3']
    assert report['degree'] == 3
    assert all(v['expected'] == v['actual'] for v in report['special_values'].values())


def test_poly_exact_value():
    _, report, _ = execute(['poly', 'legendre', '2', 'z=1/3'])
    assert report['value'] == '-1/3'


@pytest.mark.parametrize('argv', [
    ['eval', '2f1', 'a=1', 'b=1', 'c=2'],
    ['frobnicate'],
    ['eval', '2f1', 'a=1', 'b=1', 'c=2', 'z=1.2'],
    ['eval', '2f1', 'a=1', 'b=1', 'c=2', 'z=0.5', '--tol', '-1'],
    ['poly', 'hermite', 'n=-1'],
    ['quadcheck', '2f1-euler', '--contour', '[1, 2'],
])
def test_errors_exit_with_2(capsys, argv):
    assert main(argv) == 2
    assert capsys.readouterr().err.splitlines()[-1].startswith('hypertype: ')


def test_unexpected_errors_exit_with_2(capsys, monkeypatch):
    def broken(args):
        raise ZeroDivisionError("complex division by zero")

    monkeypatch.setitem(cli.COMMANDS, 'eval', broken)
    assert main(['eval', '2f1', 'a=1', 'b=1', 'c=2', 'z=0.5']) == 2
    err = capsys.readouterr().err
    assert err.splitlines()[-1] == 'hypertype: internal: ZeroDivisionError: complex division by zero'


def test_usage_error_kind(capsys):
    main(['eval', '2f1', 'a=1', 'b=1', 'c=2'])
    assert capsys.readouterr().err.splitlines()[-1] == 'hypertype: usage: z= is required'


def test_classify_gauss_operator():
    code, report, _ = execute(['classify', 'sigma=0,1,-1', 'tau=2,-3', 'eta=-1'])
    assert code == 0
    assert report['classification']['tag'] == 'Hypergeometric2F1'
    assert [row['point'] for row in report['indices']][-1] == 'inf'


def test_symmetries_verify():
    code, report, _ = execute(['symmetries', '1f1', '--verify', '--table'])
    assert code == 0
    assert report['order'] == 4
    assert len(report['composition_table']) == 4
    assert report['worst_residual'] < 1e-10


def test_kummer_evaluates_the_four_expressions():
    code, report, _ = execute(['kummer', 'At0Index0', 'z=0.3+0.1i'])
    assert code == 0
    assert len(report['values']) == 4
    assert report['spread'] < 1e-9


def test_ladder_list_and_check():
    _, listing, _ = execute(['ladder', '1f1'])
    assert len(listing['ladders']) == 6
    code, report, _ = execute(['ladder', '1f1', '2'])
    assert code == 0
    assert report['ladder']['index'] == 2


@pytest.mark.parametrize('argv', [
    ['verify', 'generating', 'legendre', 'n=8', 'z=1/3'],
    ['verify', 'identity', 'hermite-parity', 'n=4'],
    ['verify', 'recurrence', 'hermite'],
    ['verify', 'factorization', '2f1'],
    ['verify', 'commutation', 'gegenbauer'],
    ['verify', 'connection', '2f1:At1Index0'],
    ['verify', 'degenerate', '0f1', 'alpha=-2'],
    ['verify', 'gamma'],
])
def test_verify_targets(argv):
    code, report, _ = execute(argv)
    assert code == 0, report
    assert report['failures'] == 0
    assert report['rows']


def test_quadcheck():
    code, report, _ = execute(['quadcheck', '2f1-euler', 'a=1/2', 'b=1/3', 'c=2', 'z=0.4', '--boundary'])
    assert code == 0
    assert report['residual'] < 1e-7
    assert 'boundary_term' in report


def test_quadcheck_on_a_wrong_contour_fails():
    code, report, _ = execute(['quadcheck', '2f1-euler', '--contour', '[1, 2]'])
    assert code == 1
    assert report['contour'] == '[1, 2]'


def test_quadcheck_lists_representations():
    _, report, _ = execute(['quadcheck'])
    assert any(rep['id'] == 'hankel' for rep in report['representations'])


def test_suite_command():
    code, report, _ = execute(['suite', 'spot', 'gamma', '--seed', '3'])
    assert code == 0
    assert report['summary']['suites'] == 2
    assert report['seed'] == 3


def test_flags_do_not_leak_into_settings():
    before = get_settings()
    execute(['eval', '1f1', 'a=0.5', 'c=1.5', 'z=2', '--max-terms', '500', '--tol', '1e-10'])
    assert get_settings() == before


def test_parse_bindings():
    assert parse_bindings(['3', 'a=1/2']) == {'n': 3, 'a': parse_bindings(['a=1/2'])['a']}
    with pytest.raises(UsageError):
        parse_bindings(['a=1', 'a=2'])
    with pytest.raises(UsageError):
        parse_bindings(['0.5'])


def test_to_text_nests():
    text = to_text({'schema': 1, 'a': 1, 'b': {'c': [1, 2]}})
    assert text.splitlines()[0] == 'a: 1'
    assert 'schema' not in text
