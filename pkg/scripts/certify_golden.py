"""Re-run every bounded certificate for the six worked examples at chosen bounds.

    python scripts/certify_golden.py --scan-bound 150 --positivity-bound 400
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from hilbinv import ClassifyOptions, classify
from hilbinv.walls import unit_discriminant_profiles

GOLDEN = ((2, 2), (5, 2), (5, 3), (2, 6), (5, 11), (5, 14))


@dataclass(frozen=True)
class CertifyConfig:
    scan_bound: int = 100
    positivity_bound: int = 200
    aux_bound: int = 10_000
    flop_search_bound: int = 200
    workers: int = 1


def parse_args() -> CertifyConfig:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, value in CertifyConfig().__dict__.items():
        parser.add_argument("--" + name.replace("_", "-"), type=int, default=value)
    return CertifyConfig(**vars(parser.parse_args()))


def main() -> int:
    cfg = parse_args()
    failures = 0
    for t, n in GOLDEN:
        options = ClassifyOptions(
            scan_bound=cfg.scan_bound,
            positivity_bound=cfg.positivity_bound,
            aux_bound=cfg.aux_bound,
            flop_profiles=tuple(unit_discriminant_profiles(n)),
            flop_search_bound=cfg.flop_search_bound,
            workers=cfg.workers,
        )
        start = time.perf_counter()
        report = classify(t, n, options)
        elapsed = time.perf_counter() - start
        flops_ok = all(f.verdict.value == "ExcludedOnPath" for f in report.flops)
        ok = report.all_checks_pass and flops_ok
        failures += not ok
        p = report.pell
        print(f"degree {2 * t:3d}  n={n:3d}  (a, b)=({p.a}, {p.b})  "
              f"checks={'ok' if report.all_checks_pass else 'FAIL'}  "
              f"flops={'excluded' if flops_ok else 'FAIL'}  "
              f"biregularity={report.biregularity.kind.value}  {elapsed:.2f}s")
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
