"""Distribution of the chain height of random total N x N matrices against log2 N."""

from __future__ import annotations

import argparse
import math
import time
from collections import Counter
from dataclasses import dataclass, field

from signtope.bounds import chain_height
from signtope.signmat import random_total


@dataclass
class Config:
    sizes: list[int] = field(default_factory=lambda: [8, 16, 32, 64])
    seeds: int = 50


def main(cfg: Config) -> None:
    for N in cfg.sizes:
        t0 = time.perf_counter()
        hs = [chain_height(random_total(N, s)) for s in range(cfg.seeds)]
        hist = dict(sorted(Counter(hs).items()))
        print(f"N={N:>3}  log2N={math.log2(N):.0f}  mean h={sum(hs) / len(hs):.2f}  "
              f"max h={max(hs)}  max h/log2N={max(hs) / math.log2(N):.2f}  hist={hist}  "
              f"({time.perf_counter() - t0:.1f}s)")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--sizes", type=int, nargs="+", default=Config().sizes)
    p.add_argument("--seeds", type=int, default=Config.seeds)
    a = p.parse_args()
    main(Config(a.sizes, a.seeds))
