#
# For licensing see accompanying LICENSE file.
#

from omegaconf import OmegaConf

# general configuration
cfg = OmegaConf.create()
cfg.cfg_file = ''
cfg.log_level = 'WARNING'
cfg.log_file = ''

# coefficient comparison: |x-y| <= atol + rtol * max(|x|, |y|)
cfg.tolerance = OmegaConf.create()
cfg.tolerance.rtol = 1e-9
cfg.tolerance.atol = 1e-10

# parameter recovery verification
cfg.recover = OmegaConf.create()
cfg.recover.rtol = 1e-8
cfg.recover.atol = 1e-10

# numerical root finding oracle
cfg.oracle = OmegaConf.create()
cfg.oracle.tol = 1e-10
cfg.oracle.max_iter = 1000

# quintic splitting
cfg.martinelli = OmegaConf.create()
cfg.martinelli.degeneracy = 1e-12
cfg.martinelli.n_jobs = 1

# sextic solving
cfg.solve = OmegaConf.create()
cfg.solve.residual_tol = 1e-8
cfg.solve.n_jobs = 1

# report output
cfg.output = OmegaConf.create()
cfg.output.format = 'text' # 'json'
cfg.output.precision = 10
