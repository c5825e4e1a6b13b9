"""Census of all unital associative structure tables of small dimension over F_p.

    python3 scripts/tiny_census.py --p 2 --max-dim 2

For each dimension, counts tables that are associative with a unity and
splits them by the decompose outcome (and by n, dim D when decomposed).
"""
import argparse
import itertools
from collections import Counter
from dataclasses import dataclass

from wedderburn.algebra import Algebra, find_unity, validate
from wedderburn.decompose import decompose
from wedderburn.fields import GF


@dataclass
class CensusConfig:
    p: int = 2
    max_dim: int = 2


def tables(p, d):
    cells = list(itertools.product(range(p), repeat=d))
    for choice in itertools.product(cells, repeat=d * d):
        yield [[list(choice[i * d + j]) for j in range(d)] for i in range(d)]


def run(cfg: CensusConfig):
    F = GF(cfg.p)
    for d in range(1, cfg.max_dim + 1):
        counts = Counter()
        for t in tables(cfg.p, d):
            probe = Algebra(F, t, unity=(0,) * d)
            u = find_unity(probe)
            if u is None:
                continue
            A = Algebra(F, t, u)
            if not validate(A).ok:
                continue
            cert = decompose(A, 0)
            if cert.outcome == "decomposed":
                counts[f"M_{cert.n}(D), dim D={cert.corner_dim}"] += 1
            else:
                counts[cert.outcome] += 1
        total = sum(counts.values())
        print(f"dim {d}: {total} unital associative tables")
        for key, c in sorted(counts.items()):
            print(f"  {key:24s} {c}")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--p", type=int, default=CensusConfig.p)
    ap.add_argument("--max-dim", type=int, default=CensusConfig.max_dim)
    args = ap.parse_args()
    run(CensusConfig(args.p, args.max_dim))


if __name__ == "__main__":
    main()
