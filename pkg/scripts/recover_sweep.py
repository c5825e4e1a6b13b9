"""Scramble matrix algebras and time how long recovery takes.

    python3 scripts/recover_sweep.py --seeds 10 --max-n 4

Prints one row per (instance, seed) and a per-instance summary.
"""
import argparse
import statistics
import time
from dataclasses import dataclass, field

from wedderburn.algebra import matrix_algebra, restrict_scalars, scramble
from wedderburn.certify import verify_certificate
from wedderburn.decompose import decompose
from wedderburn.fields import GF, QQ


@dataclass
class SweepConfig:
    seeds: int = 5
    max_n: int = 3
    fields: list = field(default_factory=lambda: ["GF2", "GF3", "GF4/GF2", "GFbig", "QQ"])
    # scrambled M_n(Q) for n >= 3 usually ends inconclusive after many retries
    max_n_rational: int = 2
    verbose: bool = False


def build(n, fname):
    if fname == "GF4/GF2":
        return restrict_scalars(matrix_algebra(n, GF(2, 2))), 2
    F = {"GF2": GF(2), "GF3": GF(3), "GF5": GF(5), "GF4": GF(2, 2), "GF256": GF(2, 8),
         "GFbig": GF(2147483647), "QQ": QQ}[fname]
    return matrix_algebra(n, F), 1


def run(cfg: SweepConfig):
    rows = []
    for fname in cfg.fields:
        top = min(cfg.max_n, cfg.max_n_rational) if fname == "QQ" else cfg.max_n
        for n in range(1, top + 1):
            base, k = build(n, fname)
            times = []
            for seed in range(cfg.seeds):
                A, _ = scramble(base, seed)
                t0 = time.perf_counter()
                cert = decompose(A, seed)
                dt = time.perf_counter() - t0
                ok = (cert.outcome == "decomposed" and (cert.n, cert.corner_dim) == (n, k)
                      and verify_certificate(A, cert).ok)
                times.append(dt)
                if cfg.verbose:
                    print(f"  {fname:8s} n={n} seed={seed} dim={A.dim:3d} "
                          f"retries={cert.retries} {dt:7.3f}s {'ok' if ok else 'WRONG'}")
                rows.append((fname, n, seed, ok, dt))
            print(f"{fname:8s} n={n} dim={base.dim:3d}  median {statistics.median(times):7.3f}s"
                  f"  max {max(times):7.3f}s")
    bad = [r for r in rows if not r[3]]
    print(f"{len(rows) - len(bad)}/{len(rows)} recovered")
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seeds", type=int, default=SweepConfig.seeds)
    ap.add_argument("--max-n", type=int, default=SweepConfig.max_n)
    ap.add_argument("--fields", nargs="+", default=None)
    ap.add_argument("-v", "--verbose", action="store_true")
    args = ap.parse_args()
    cfg = SweepConfig(seeds=args.seeds, max_n=args.max_n, verbose=args.verbose)
    if args.fields:
        cfg.fields = args.fields
    run(cfg)


if __name__ == "__main__":
    main()
