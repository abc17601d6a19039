"""Survey how often the resultant degree falls below the prediction.

Random sparse systems with constant terms; for each, record
prediction - deg psi, whether a genericity warning fired, and whether
A_0 and B_0 share a factor.

    python3 scripts/drop_survey.py --systems 300 --seed 3
"""

import argparse
import random
from collections import Counter
from dataclasses import dataclass

from elimdeg.errors import CommonFactorError
from elimdeg.polynomial import Polynomial, degree_in
from elimdeg.resultant import check_prediction


@dataclass
class Config:
    systems: int = 200
    max_deg: int = 4
    max_terms: int = 6
    bound: int = 3
    seed: int = 0


def random_system(rng, cfg):
    def poly():
        terms = {(rng.randint(0, cfg.max_deg), rng.randint(0, cfg.max_deg)): rng.choice([-1, 1]) * rng.randint(1, cfg.bound)
                 for _ in range(rng.randint(1, cfg.max_terms))}
        terms[(0, 0)] = rng.randint(1, cfg.bound)
        return Polynomial(terms)

    return poly(), poly()


def run(cfg: Config):
    rng = random.Random(cfg.seed)
    drops, warned, shared = Counter(), Counter(), Counter()
    done = 0
    while done < cfg.systems:
        f, theta = random_system(rng, cfg)
        if degree_in(theta, "y") == 0:
            continue
        try:
            r = check_prediction(f, theta)
        except CommonFactorError:
            continue
        done += 1
        drops[r.drop] += 1
        if r.drop:
            warned[bool(r.warnings)] += 1
            shared[not r.common_factor_x.is_constant()] += 1
    return drops, warned, shared


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, default in vars(Config()).items():
        parser.add_argument(f"--{name.replace('_', '-')}", type=int, default=default)
    cfg = Config(**vars(parser.parse_args()))
    drops, warned, shared = run(cfg)
    print("drop histogram:", dict(sorted(drops.items())))
    print("dropping systems with a warning:", warned[True], "without:", warned[False])
    print("dropping systems with gcd(A_0, B_0) != 1:", shared[True])


if __name__ == "__main__":
    main()
