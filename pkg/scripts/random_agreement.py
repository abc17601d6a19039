"""Cross-check the mixed-area methods on random lattice-polygon pairs.

    python3 scripts/random_agreement.py --pairs 1000 --seed 1
"""

import argparse
import random
from dataclasses import dataclass

from elimdeg.geometry import convex_hull
from elimdeg.mixed_area import all_methods


@dataclass
class Config:
    pairs: int = 200
    max_points: int = 12
    box: int = 10
    seed: int = 0


def random_polygon(rng, cfg):
    n = rng.randint(1, cfg.max_points)
    return convex_hull([(rng.randint(0, cfg.box), rng.randint(0, cfg.box)) for _ in range(n)])


def run(cfg: Config):
    rng = random.Random(cfg.seed)
    disagreements = []
    for i in range(cfg.pairs):
        P, Q = random_polygon(rng, cfg), random_polygon(rng, cfg)
        values = all_methods(P, Q)
        values.pop("minding")
        if len(set(values.values())) != 1:
            disagreements.append((i, P.vertices, Q.vertices, values))
    return disagreements


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--pairs", type=int, default=Config.pairs)
    parser.add_argument("--max-points", type=int, default=Config.max_points)
    parser.add_argument("--box", type=int, default=Config.box)
    parser.add_argument("--seed", type=int, default=Config.seed)
    cfg = Config(**{k.replace("-", "_"): v for k, v in vars(parser.parse_args()).items()})
    bad = run(cfg)
    print(f"{cfg.pairs - len(bad)}/{cfg.pairs} pairs agree across dilation, ie, recursion, subdivision")
    for row in bad[:20]:
        print(*row)


if __name__ == "__main__":
    main()
