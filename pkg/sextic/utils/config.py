#
# For licensing see accompanying LICENSE file.
#

from omegaconf import OmegaConf

from sextic.cfg.constants import MAX_PRECISION, MIN_PRECISION
from sextic.utils.errors import InputError


def get_cfg(default_cfg, cfg_file='', dotlist=(), **overrides):
    """
    default config <- yaml preset <- key=value tokens <- explicit flag overrides.
    `overrides` maps dotted keys to values; None values are skipped.
    """
    cfg = OmegaConf.merge(default_cfg)
    # unknown keys in presets or key=value tokens are errors
    OmegaConf.set_struct(cfg, True)
    try:
        if cfg_file:
            cfg = OmegaConf.merge(cfg, OmegaConf.load(cfg_file))
            cfg.cfg_file = cfg_file
        if len(dotlist) > 0:
            cfg = OmegaConf.merge(cfg, OmegaConf.from_dotlist(list(dotlist)))
        for key, value in overrides.items():
            if value is not None:
                OmegaConf.update(cfg, key, value, merge=True)
    except Exception as e:
        raise InputError(f'invalid configuration: {e}') from e
    validate_cfg(cfg)
    return cfg


def _number(value, name, minimum=0.0):
    if isinstance(value, bool) or not isinstance(value, (int, float)) or not value > minimum:
        raise InputError(f'{name} must be a number greater than {minimum}, got {value!r}')


def validate_cfg(cfg):
    for group in ('tolerance', 'recover'):
        for key in ('rtol', 'atol'):
            _number(cfg[group][key], f'{group}.{key}')
    _number(cfg.oracle.tol, 'oracle.tol')
    if not isinstance(cfg.oracle.max_iter, int) or cfg.oracle.max_iter < 1:
        raise InputError(f'oracle.max_iter must be a positive integer, got {cfg.oracle.max_iter!r}')
    _number(cfg.martinelli.degeneracy, 'martinelli.degeneracy')
    _number(cfg.solve.residual_tol, 'solve.residual_tol')
    for group in ('martinelli', 'solve'):
        if not isinstance(cfg[group].n_jobs, int) or cfg[group].n_jobs == 0:
            raise InputError(f'{group}.n_jobs must be a nonzero integer, got {cfg[group].n_jobs!r}')
    precision = cfg.output.precision
    if isinstance(precision, bool) or not isinstance(precision, int) or not MIN_PRECISION <= precision <= MAX_PRECISION:
        raise InputError(f'output.precision must be an integer in [{MIN_PRECISION}, {MAX_PRECISION}], got {precision!r}')
    if cfg.output.format not in ('text', 'json'):
        raise InputError(f"output.format must be 'text' or 'json', got {cfg.output.format!r}")


def find_cfg_diff(default_cfg, cfg, delimiter=' '):
    """ key=value for every leaf that differs from the defaults """
    default = flatten(OmegaConf.to_container(default_cfg), separator='.')
    current = flatten(OmegaConf.to_container(cfg), separator='.')
    diff = [f'{k}={v}' for k, v in current.items() if default.get(k) != v]
    return delimiter.join(diff)


def flatten(dictionary, parent_key='', separator='/', dtype=dict):
    from collections.abc import MutableMapping
    items = []
    for key, value in dictionary.items():
        new_key = parent_key + separator + key if parent_key else key
        if isinstance(value, MutableMapping):
            items.extend(flatten(value, new_key, separator=separator).items())
        else:
            items.append((new_key, value))
    return dtype(items)
