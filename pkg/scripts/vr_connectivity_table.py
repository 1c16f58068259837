"""Reduced mod-2 Betti numbers of VR(Q_n, k) next to the alpha(n, k) - 2 prediction."""

from __future__ import annotations

import argparse
import math
import time
from dataclasses import dataclass

from signtope.gf2top import betti, homological_connectivity
from signtope.vrcube import alpha, vr_cube


@dataclass
class Config:
    n_max: int = 5


def main(cfg: Config) -> None:
    print(f"{'n':>2} {'k':>2} {'alpha':>8} {'pred':>5} {'conn':>5}  betti")
    for n in range(2, cfg.n_max + 1):
        for k in range(1, n):
            t0 = time.perf_counter()
            K = vr_cube(n, k)
            a = alpha(n, k)
            pred = math.floor(a) - 2
            b = betti(K)
            conn = homological_connectivity(K)
            print(f"{n:>2} {k:>2} {str(a):>8} {pred:>5} {conn:>5}  {b}  ({time.perf_counter() - t0:.1f}s)")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--n-max", type=int, default=Config.n_max)
    main(Config(p.parse_args().n_max))
