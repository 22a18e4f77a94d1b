#
# For licensing see accompanying LICENSE file.
#

import pytest

from sextic.cfg.config import cfg as default_cfg
from sextic.poly.core import Tolerance
from sextic.utils.config import find_cfg_diff, flatten, get_cfg
from sextic.utils.errors import InputError


def test_defaults():
    cfg = get_cfg(default_cfg)
    assert Tolerance.from_cfg(cfg.tolerance) == Tolerance(1e-9, 1e-10)
    assert Tolerance.from_cfg(cfg.recover) == Tolerance(1e-8, 1e-10)
    assert cfg.output.format == 'text'
    assert find_cfg_diff(default_cfg, cfg) == ''


def test_override_order(tmp_path):
    cfg_file = tmp_path / 'preset.yaml'
    cfg_file.write_text('tolerance:\n  rtol: 1.0e-6\n  atol: 1.0e-7\noutput:\n  precision: 5\n')
    cfg = get_cfg(default_cfg, str(cfg_file), ['output.precision=6'], **{'tolerance.rtol': 1e-5, 'tolerance.atol': None})
    # flags beat key=value tokens, which beat the preset
    assert cfg.tolerance.rtol == 1e-5
    assert cfg.tolerance.atol == 1e-7
    assert cfg.output.precision == 6
    assert cfg.cfg_file == str(cfg_file)
    # defaults are left untouched
    assert default_cfg.tolerance.rtol == 1e-9


def test_find_cfg_diff():
    cfg = get_cfg(default_cfg, dotlist=['oracle.max_iter=50', 'output.format=json'])
    assert find_cfg_diff(default_cfg, cfg) == 'oracle.max_iter=50 output.format=json'


@pytest.mark.parametrize('dotlist', [
    ['no_such.key=1'],
    ['output.precision=0'],
    ['output.precision=18'],
    ['output.format=xml'],
    ['tolerance.rtol=0'],
    ['recover.atol=-1'],
    ['oracle.max_iter=0'],
    ['solve.residual_tol=abc'],
    ['martinelli.n_jobs=0'],
])
def test_invalid_configs(dotlist):
    with pytest.raises(InputError):
        get_cfg(default_cfg, dotlist=dotlist)


def test_missing_cfg_file(tmp_path):
    with pytest.raises(InputError):
        get_cfg(default_cfg, str(tmp_path / 'missing.yaml'))


def test_flatten():
    assert flatten({'a': {'b': 1, 'c': {'d': 2}}, 'e': 3}, separator='.') == {'a.b': 1, 'a.c.d': 2, 'e': 3}
