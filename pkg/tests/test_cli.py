#
# For licensing see accompanying LICENSE file.
#

import json
from pathlib import Path

import pytest
from loguru import logger

from conftest import WORKED_ROOTS
from sextic.cli.app import run
from sextic.cli.commands import parse_coefficients
from sextic.poly.core import Polynomial, residual
from sextic.poly.oracle import multiset_match
from sextic.utils.errors import InputError
from sextic.utils.general import complex_from_dict


EQ14_ARGS = ['1', '0', '0', '2', '21', '-18', '51']


def run_json(capsys, *argv):
    code = run(list(argv) + ['--json'])
    return code, json.loads(capsys.readouterr().out)


def test_parse_coefficients():
    assert parse_coefficients(['1', '-2.5', '3/4'], 3) == [1.0, -2.5, 0.75]
    with pytest.raises(InputError):
        parse_coefficients(['1', '2'], 3)
    with pytest.raises(InputError):
        parse_coefficients(['1', 'x', '2'], 3)
    with pytest.raises(InputError):
        parse_coefficients(['1', '1/0', '2'], 3)


def test_solve_worked_example_text(capsys):
    assert run(['solve'] + EQ14_ARGS) == 0
    out = capsys.readouterr().out
    assert 'params: a=0 b=2 c=-3 d=1' in out
    assert 'resolvent: 1 0 -1 1 -6 2' in out
    assert '1.532088886+1.414213562i' in out
    assert 'residual_max:' in out


def test_solve_worked_example_json(capsys):
    code, report = run_json(capsys, 'solve', *EQ14_ARGS)
    assert code == 0
    assert report['status'] == 'ok'
    roots = [complex_from_dict(z) for z in report['roots']]
    assert multiset_match(roots, WORKED_ROOTS, 1e-8)
    assert report['residual_max'] < 1e-9

    # the reported roots really solve the input
    p = Polynomial.from_descending(float(c) for c in EQ14_ARGS)
    assert max(residual(p, z) for z in roots) == pytest.approx(report['residual_max'], rel=1e-12, abs=1e-300)


def test_text_and_json_agree(capsys):
    _, report = run_json(capsys, 'check', *EQ14_ARGS)
    run(['check'] + EQ14_ARGS)
    out = capsys.readouterr().out
    values = {name: complex_from_dict(report['params'][name]) for name in 'abcd'}
    assert values == {'a': 0, 'b': 2, 'c': -3, 'd': 1}
    assert 'a=0 b=2 c=-3 d=1' in out


def test_solve_x6(capsys):
    code, report = run_json(capsys, 'solve', '1', '0', '0', '0', '0', '0', '0')
    assert code == 0
    assert [complex_from_dict(z) for z in report['roots']] == [0] * 6


@pytest.mark.parametrize('verb', ['solve', 'check', 'resolvent'])
def test_not_solvable(capsys, verb):
    code = run([verb, '1', '0', '0', '0', '0', '0', '1'])
    assert code == 2
    assert 'not Milanez-solvable' in capsys.readouterr().out


def test_not_solvable_json(capsys):
    code, report = run_json(capsys, 'solve', '1', '0', '0', '0', '0', '1', '1')
    assert code == 2
    assert report['status'] == 'not_solvable'
    assert report['message'] == 'not Milanez-solvable'


@pytest.mark.parametrize('args, expected', [
    (EQ14_ARGS, 'a=0 b=2 c=-3 d=1'),
    (['1', '0', '0', '0', '0', '0', '0'], 'a=0 b=0 c=0 d=0'),
    (['1', '-1', '4', '-1', '2', '-3', '1'], 'a=1 b=1 c=1 d=1'),
    (['1/2', '0', '0', '1', '21/2', '-9', '51/2'], 'a=0 b=2 c=-3 d=1'),
    (['3', '0', '0', '6', '63', '-54', '153'], 'a=0 b=2 c=-3 d=1'),
])
def test_check(capsys, args, expected):
    assert run(['check'] + args) == 0
    assert expected in capsys.readouterr().out


@pytest.mark.parametrize('args, expected', [
    (EQ14_ARGS, 'resolvent: 1 0 -1 1 -6 2'),
    (['1', '0', '0', '0', '0', '0', '0'], 'resolvent: 1 0 0 0 0 0'),
    (['1', '-1', '4', '-1', '2', '-3', '1'], 'resolvent: 1 0 1 1 0 1'),
])
def test_resolvent(capsys, args, expected):
    assert run(['resolvent'] + args) == 0
    assert expected in capsys.readouterr().out


def test_split_worked_quintic(capsys):
    code, report = run_json(capsys, 'split', '-1', '1', '-6', '2')
    assert code == 0
    assert report['product_residual'] < 1e-9
    quad = [complex_from_dict(c) for c in report['quadratic']]
    cubic = [complex_from_dict(c) for c in report['cubic']]
    product = Polynomial.from_descending(quad) * Polynomial.from_descending(cubic)
    expected = Polynomial.from_descending([1, 0, -1, 1, -6, 2])
    assert max(abs(x - y) for x, y in zip(product, expected)) < 1e-9
    roots = [complex_from_dict(z) for z in report['roots']]
    assert multiset_match(roots, [2 ** 0.5 * 1j, -(2 ** 0.5) * 1j] + sorted({z.real for z in WORKED_ROOTS}), 1e-9)


def test_split_text(capsys):
    assert run(['split', '0', '0', '-1', '0']) == 0
    out = capsys.readouterr().out
    for key in ('k:', 'quadratic:', 'cubic:', 'product_residual:', 'roots:', 'lifted_params:'):
        assert key in out


def test_split_regroups_roots(capsys):
    code, report = run_json(capsys, 'split', '0', '0', '-1', '0')
    assert code == 0
    roots = [complex_from_dict(z) for z in report['roots']]
    assert multiset_match(roots, [0, 1, -1, 1j, -1j], 1e-9)


def test_split_degenerate(capsys):
    code = run(['split', '0', '0', '0', '0'])
    assert code == 4
    assert 'status: error' in capsys.readouterr().out


def test_split_degenerate_json(capsys):
    code, report = run_json(capsys, 'split', '0', '0', '0', '0')
    assert code == 4
    assert report['status'] == 'error'


@pytest.mark.parametrize('args, expected', [
    (['-1', '1', '-6', '2'], 'descending: 1 0 -3 1 21 -24 -14 33 -135 -51 0'),
    (['0', '0', '0', '0'], 'martinelli: k^10'),
    (['1', '0', '0', '0'], 'martinelli: k^10 + 3k^8 + 3k^6 + k^4'),
])
def test_martinelli(capsys, args, expected):
    assert run(['martinelli'] + args) == 0
    assert expected in capsys.readouterr().out


@pytest.mark.parametrize('argv', [
    ['solve', '1', '2', '3'],
    ['solve', '0', '0', '0', '2', '21', '-18', '51'],
    ['solve', '1', 'x', '0', '0', '0', '0', '0'],
    ['split', '1', '2', '3'],
    ['factor'] + EQ14_ARGS,
    [],
    ['solve', '--precision', '0'] + EQ14_ARGS,
    ['solve', '--rtol', '-1'] + EQ14_ARGS,
    ['solve', '--verbose'] + EQ14_ARGS,
    ['solve'] + EQ14_ARGS + ['no_such.key=1'],
    ['check', '1', '0', '0', '2', '1e400', '-18', '51'],
    ['split', '-1', '1', '1' + '0' * 400 + '/3', '2'],
])
def test_parse_errors(capsys, argv):
    assert run(argv) == 3
    assert capsys.readouterr().out == ''


def test_precision_flag(capsys):
    assert run(['solve', '--precision', '4'] + EQ14_ARGS) == 0
    out = capsys.readouterr().out
    assert '1.532+1.414i' in out
    assert '1.532088886' not in out


def test_dotlist_override(capsys):
    assert run(['solve'] + EQ14_ARGS + ['output.format=json']) == 0
    assert json.loads(capsys.readouterr().out)['status'] == 'ok'


def test_cfg_file(capsys, tmp_path):
    cfg_file = tmp_path / 'preset.yaml'
    cfg_file.write_text('output:\n  precision: 5\nrecover:\n  rtol: 1.0e-6\n')
    assert run(['check', '--cfg_file', str(cfg_file)] + EQ14_ARGS) == 0
    assert 'a=0 b=2 c=-3 d=1' in capsys.readouterr().out


def test_log_file(capsys, tmp_path):
    log_file = tmp_path / 'sextic.log'
    assert run(['solve'] + EQ14_ARGS + [f'log_file={log_file}']) == 0
    # closing the sinks flushes the file
    logger.remove()
    assert 'recover' in log_file.read_text()


def preset(name):
    return str(Path(__file__).resolve().parents[1] / 'cfg_files' / name)


def test_strict_preset(capsys):
    assert run(['solve', '--cfg_file', preset('strict.yaml')] + EQ14_ARGS) == 0
    out = capsys.readouterr().out
    assert 'params: a=0 b=2 c=-3 d=1' in out
    assert '1.532088886237' in out


def test_clustered_preset(capsys):
    code, report = run_json(capsys, 'split', '--cfg_file', preset('clustered.yaml'), '-1', '1', '-6', '2')
    assert code == 0
    assert report['product_residual'] < 1e-6
