"""Classify a grid of (t, n) cells and write the versioned JSON plus a text summary.

    python scripts/run_sweep.py --t-max 30 --n-max 30 --out sweep.json
"""

from __future__ import annotations

import argparse
import logging
import time
from dataclasses import asdict, dataclass
from pathlib import Path

from hilbinv import ClassifyOptions, batch_sweep
from hilbinv.report import render_sweep


@dataclass(frozen=True)
class SweepConfig:
    t_min: int = 2
    t_max: int = 30
    n_min: int = 2
    n_max: int = 30
    scan_bound: int = 60
    positivity_bound: int = 200
    aux_bound: int = 10_000
    workers: int = 1
    out: Path | None = None


def parse_args() -> SweepConfig:
    defaults = SweepConfig()
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, value in asdict(defaults).items():
        flag = "--" + name.replace("_", "-")
        kind = Path if name == "out" else int
        parser.add_argument(flag, type=kind, default=value)
    return SweepConfig(**vars(parser.parse_args()))


def main() -> None:
    cfg = parse_args()
    logging.basicConfig(level=logging.INFO, format="%(levelname)s %(message)s")
    options = ClassifyOptions(
        scan_bound=cfg.scan_bound,
        positivity_bound=cfg.positivity_bound,
        aux_bound=cfg.aux_bound,
    )
    start = time.perf_counter()
    result = batch_sweep(range(cfg.t_min, cfg.t_max + 1), range(cfg.n_min, cfg.n_max + 1),
                         options, workers=cfg.workers)
    elapsed = time.perf_counter() - start
    if cfg.out is not None:
        cfg.out.write_bytes(render_sweep(result, "json"))
        logging.info("wrote %s", cfg.out)
    for label, count in result.summary.items():
        print(f"{label:40s} {count:5d}")
    print(f"{len(result.reports) + len(result.errors)} cells in {elapsed:.2f}s")


if __name__ == "__main__":
    main()
