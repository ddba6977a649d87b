"""Five-way verify on random instances; prints counts and any inconsistent instance."""

import argparse
import time
from dataclasses import dataclass, field
from typing import List

from nubar.closure import verify_equivalences
from nubar.suite import random_instances


@dataclass
class SweepConfig:
    seeds: List[int] = field(default_factory=lambda: [0, 1, 2, 3, 4])
    count: int = 40
    samples: int = 100


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seeds", type=int, nargs="+", default=SweepConfig().seeds)
    ap.add_argument("--count", type=int, default=SweepConfig.count)
    ap.add_argument("--samples", type=int, default=SweepConfig.samples)
    args = SweepConfig(**vars(ap.parse_args()))
    start = time.perf_counter()
    total = bad = trues = 0
    for seed in args.seeds:
        for f, I, p, q in random_instances(seed, args.count):
            rep = verify_equivalences(f, I, p, q, samples=args.samples, seed=seed)
            total += 1
            if not rep.consistent:
                bad += 1
                print(f"inconsistent: f={f} I={I} p/q={p}/{q} {rep.verdicts} {rep.details['numeric']}")
            else:
                trues += rep.verdict
    print(f"{total} instances, {bad} inconsistent, {trues} true, {time.perf_counter() - start:.1f}s")
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
