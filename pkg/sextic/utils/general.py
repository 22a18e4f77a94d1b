#
# For licensing see accompanying LICENSE file.
#

import sys

from loguru import logger
from omegaconf import OmegaConf

from sextic.utils.config import find_cfg_diff


def get_logger(cfg, default_cfg=None):
    """ stderr sink at cfg.log_level, plus a file sink when cfg.log_file is set """
    logger.remove()
    logger.enable('sextic')
    logger.add(sys.stderr, level=cfg.log_level, format='<level>{level: <8}</level> | {message}')
    if cfg.log_file:
        logger.add(cfg.log_file, level='DEBUG')
        logger.info(f'Logging to {cfg.log_file}')
        logger.debug(OmegaConf.to_yaml(cfg))
    if default_cfg is not None:
        diff = find_cfg_diff(default_cfg, cfg)
        if diff:
            logger.info(f'config overrides: {diff}')


def complex_to_dict(z):
    z = complex(z)
    return {'re': z.real, 'im': z.imag}


def complex_from_dict(d):
    return complex(d['re'], d['im'])
