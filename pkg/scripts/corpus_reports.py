"""Write one invariant report per corpus instance and print a summary table."""

from __future__ import annotations

import argparse
import json
from dataclasses import asdict, dataclass
from pathlib import Path

from signtope.bounds import ReportConfig, invariant_report
from signtope.reproduce import corpus


@dataclass
class Config:
    out_dir: Path = Path("runs/corpus")
    search_d_max: int = 6
    seed: int = 0


def main(cfg: Config) -> None:
    cfg.out_dir.mkdir(parents=True, exist_ok=True)
    cols = ["vc", "omega_diamond", "coind_lb", "swh", "h", "phi_image_dim", "ind_ub", "srank_ub"]
    print(f"{'instance':<32}" + "".join(f"{c:>14}" for c in cols) + "  chain")
    for A in corpus():
        rep = invariant_report(A, ReportConfig(search_d_max=cfg.search_d_max, search_seed=cfg.seed))
        name = rep.instance.replace("(", "_").replace(")", "").replace(",", "_").replace("=", "")
        out = rep.to_json()
        out["config"] = {k: str(v) for k, v in asdict(cfg).items()}
        (cfg.out_dir / f"{name}.json").write_text(json.dumps(out, indent=2))
        print(f"{rep.instance:<32}" + "".join(f"{str(rep.values.get(c, '-')):>14}" for c in cols)
              + f"  {'ok' if rep.chain_ok else 'VIOLATED'}")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--out-dir", type=Path, default=Config.out_dir)
    p.add_argument("--search-d-max", type=int, default=Config.search_d_max)
    p.add_argument("--seed", type=int, default=Config.seed)
    a = p.parse_args()
    main(Config(a.out_dir, a.search_d_max, a.seed))
