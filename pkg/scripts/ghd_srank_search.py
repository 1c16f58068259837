"""Search for GHD realizations below the 2k+1 projection dimension.

A hit in dimension d is an exact, verified upper bound srank <= d; a miss
says nothing.  The lower side printed is vc(GHD), which srank cannot beat.
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from signtope.bounds import srank_upper_search, vc_dimension
from signtope.signmat import ghd


@dataclass
class Config:
    cases: tuple[tuple[int, int], ...] = ((3, 1), (4, 1), (5, 1), (5, 2))
    restarts: int = 8
    seed: int = 0


def main(cfg: Config) -> None:
    for n, k in cfg.cases:
        A = ghd(n, k)
        vc = vc_dimension(A, max_cols=64)
        best = None
        t0 = time.perf_counter()
        for d in range(max(vc, 1), 2 * k + 1):
            R = srank_upper_search(A, d, seed=cfg.seed, d_min=d, restarts=cfg.restarts)
            if R is not None:
                best = d
                break
        found = f"found d={best}" if best else f"nothing below {2 * k + 1}"
        print(f"ghd({n},{k}): vc={vc}, projection d={2 * k + 1}, search: {found}  ({time.perf_counter() - t0:.1f}s)")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--restarts", type=int, default=Config.restarts)
    p.add_argument("--seed", type=int, default=Config.seed)
    a = p.parse_args()
    main(Config(restarts=a.restarts, seed=a.seed))
