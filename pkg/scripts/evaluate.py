#
# For licensing see accompanying LICENSE file.
#

import os
import sys
import json
import math
import time
import argparse
import itertools
from loguru import logger
from tqdm import tqdm

sys.path.append('.')

from sextic.cfg.config import cfg as default_cfg
from sextic.poly.core import Polynomial, max_coeff_error, multiply, residual, scale
from sextic.poly.oracle import find_roots, max_match_distance, multiset_match
from sextic.solvers.martinelli import martinelli_coeffs, martinelli_rational_eval
from sextic.solvers.milanez import (
    MilanezParams,
    NotSolvable,
    SexticMonic,
    forward,
    normalize_sextic,
    quartic_cofactor,
    recover,
    resolvent_quintic,
    solve_sextic,
)
from sextic.utils.config import get_cfg
from sextic.utils.general import get_logger
from sextic.utils.sampler import ParamSampler, factor_root_separation


WORKED_INPUT = [1, 0, 0, 2, 21, -18, 51]


def worked_example(cfg, sampler):
    expected = [
        complex(2 * r, s * math.sqrt(2))
        for r in (math.cos(2 * math.pi / 9), math.cos(4 * math.pi / 9), -math.cos(math.pi / 9))
        for s in (1, -1)
    ]
    solution = solve_sextic(normalize_sextic(WORKED_INPUT), cfg=cfg)
    resolvent_ok = resolvent_quintic(solution.params).polynomial == Polynomial.from_descending([1, 0, -1, 1, -6, 2])
    worst = max_match_distance(solution.roots, expected)
    return {
        'passed': bool(solution.params == MilanezParams(0, 2, -3, 1) and resolvent_ok
                       and worst <= 1e-8 and solution.residual_max < 1e-9),
        'worst_root_error': worst,
        'residual_max': solution.residual_max,
    }


def rational_vs_expanded(cfg, sampler):
    worst = 0.0
    for _ in tqdm(range(100), desc='rational vs expanded', leave=False):
        q = sampler.quintic()
        poly = martinelli_coeffs(q)
        for _ in range(10):
            k = sampler.scalar()
            err = abs(martinelli_rational_eval(k, q) - poly(k)) / ((1 + abs(k)) ** 10 * q.scale)
            worst = max(worst, err)
    return {'passed': worst <= 1e-8, 'worst_normalized_error': worst}


def factorization_identity(cfg, sampler):
    worst = 0.0
    for _ in tqdm(range(100), desc='factorization identity', leave=False):
        params = sampler.params()
        lhs = multiply(quartic_cofactor(params), forward(params).polynomial)
        rhs = martinelli_coeffs(resolvent_quintic(params))
        worst = max(worst, max_coeff_error(lhs, rhs))
    return {'passed': worst <= 1e-7, 'worst_coeff_error': worst}


def pair_sums(cfg, sampler):
    worst = 0.0
    for _ in tqdm(range(50), desc='pair sums', leave=False):
        q = resolvent_quintic(sampler.params())
        poly = martinelli_coeffs(q)
        roots = find_roots(q.polynomial, cfg.oracle.tol, cfg.oracle.max_iter)
        for r_i, r_j in itertools.combinations(roots, 2):
            worst = max(worst, residual(poly, r_i + r_j))
    return {'passed': worst <= 1e-6, 'worst_residual': worst}


def round_trip(cfg, sampler):
    worst_coeff, worst_root, skipped, failures = 0.0, 0.0, 0, 0
    for _ in tqdm(range(200), desc='round trip', leave=False):
        params = sampler.params()
        sextic = forward(params)
        recovered = recover(sextic)
        if isinstance(recovered, NotSolvable):
            failures += 1
            continue
        worst_coeff = max(worst_coeff, max_coeff_error(forward(recovered).polynomial, sextic.polynomial))
        if factor_root_separation(params) < 1e-2:
            skipped += 1
            continue
        solution = solve_sextic(sextic, cfg=cfg)
        oracle = find_roots(sextic.polynomial, cfg.oracle.tol, cfg.oracle.max_iter)
        if not multiset_match(solution.roots, oracle, 1e-6):
            failures += 1
        worst_root = max(worst_root, max_match_distance(solution.roots, oracle))
    return {
        'passed': failures == 0 and worst_coeff <= 1e-7,
        'worst_coeff_error': worst_coeff,
        'worst_root_distance': worst_root,
        'skipped_close_roots': skipped,
        'failures': failures,
    }


def negative_classification(cfg, sampler):
    sextics = [SexticMonic(0, 0, 0, 0, 0, 1), SexticMonic(0, 0, 0, 0, 1, 1)]
    while len(sextics) < 22:
        s = sampler.sextic()
        # a random sextic that happens to verify is not a negative example
        if isinstance(recover(s), NotSolvable):
            sextics.append(s)
    results = [recover(s) for s in sextics]
    classified = sum(isinstance(r, NotSolvable) for r in results)
    return {'passed': classified == len(sextics), 'not_solvable': classified, 'total': len(sextics)}


def cofactor_root(cfg, sampler):
    worst = 0.0
    for _ in tqdm(range(100), desc='cofactor root', leave=False):
        params = sampler.params()
        cofactor = quartic_cofactor(params)
        worst = max(worst, abs(cofactor(params.a)) / max(1.0, scale(cofactor)))
    return {'passed': worst <= 1e-9, 'worst_normalized_value': worst}


EXPERIMENTS = {
    'worked_example': worked_example,
    'rational_vs_expanded': rational_vs_expanded,
    'factorization_identity': factorization_identity,
    'pair_sums': pair_sums,
    'round_trip': round_trip,
    'negative_classification': negative_classification,
    'cofactor_root': cofactor_root,
}


def main(cfg, output_dir, seed):
    os.makedirs(output_dir, exist_ok=True)
    cfg.log_file = os.path.join(output_dir, 'evaluate.log')
    get_logger(cfg, default_cfg)

    results = {}
    for name, experiment in tqdm(EXPERIMENTS.items(), desc='Experiments'):
        # real parameters except for the two algebraic identities
        complex_valued = name in ('rational_vs_expanded', 'factorization_identity')
        sampler = ParamSampler(seed=seed, magnitude=3.0, complex_valued=complex_valued)
        start = time.perf_counter()
        result = experiment(cfg, sampler)
        result['runtime_s'] = time.perf_counter() - start
        results[name] = result
        log = logger.info if result['passed'] else logger.error
        log(f'{name}: {"PASS" if result["passed"] else "FAIL"} ({result["runtime_s"]:.3f}s) {result}')

    with open(os.path.join(output_dir, 'results.json'), 'w') as f:
        json.dump(results, f, indent=4)
    return all(r['passed'] for r in results.values())


if __name__=='__main__':
    parser = argparse.ArgumentParser()
    parser.add_argument("-o", "--output_dir", default='output/evaluate', help="path to the output directory")
    parser.add_argument("-c", "--cfg_file", default='', help="yaml preset merged over the defaults")
    parser.add_argument("--seed", type=int, default=0, help="seed of the random draws")

    args, extras = parser.parse_known_args()

    cfg = get_cfg(default_cfg, args.cfg_file, extras)
    # experiment summaries are logged at INFO
    if cfg.log_level == default_cfg.log_level:
        cfg.log_level = 'INFO'

    sys.exit(0 if main(cfg, args.output_dir, args.seed) else 1)
