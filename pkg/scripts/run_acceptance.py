"""Run every verification suite and write a JSON report per suite."""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import asdict, dataclass
from pathlib import Path

from stablehcm import verify


@dataclass
class AcceptanceConfig:
    out_dir: Path = Path("results/acceptance")
    suites: tuple = tuple(verify.SUITES)
    seed: int = 0


def run(cfg: AcceptanceConfig) -> dict:
    cfg.out_dir.mkdir(parents=True, exist_ok=True)
    summary = {}
    for name in cfg.suites:
        start = time.perf_counter()
        checks = verify.run(name, seed=cfg.seed)
        elapsed = time.perf_counter() - start
        failed = [c.name for c in checks if c.passed is False]
        doc = {"suite": name, "pass": not failed, "failed": failed, "seconds": elapsed,
               "rows": [c.to_dict() for c in checks]}
        (cfg.out_dir / f"{name}.json").write_text(json.dumps(doc, indent=2) + "\n")
        summary[name] = {"pass": not failed, "failed": len(failed), "checks": len(checks),
                         "seconds": round(elapsed, 2)}
        print(f"{name:15s} {'PASS' if not failed else 'FAIL'}  {len(checks)} checks  {elapsed:.1f}s")
    config = {k: str(v) if isinstance(v, Path) else v for k, v in asdict(cfg).items()}
    (cfg.out_dir / "summary.json").write_text(
        json.dumps({"config": config, "suites": summary}, indent=2) + "\n")
    return summary


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", type=Path, default=AcceptanceConfig.out_dir)
    parser.add_argument("--suite", nargs="+", choices=list(verify.SUITES))
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args(argv)
    cfg = AcceptanceConfig(out_dir=args.out_dir, seed=args.seed,
                           suites=tuple(args.suite or verify.SUITES))
    summary = run(cfg)
    return 0 if all(s["pass"] for s in summary.values()) else 1


if __name__ == "__main__":
    sys.exit(main())
