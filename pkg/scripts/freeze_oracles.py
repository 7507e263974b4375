"""Recompute the reference values in tests/reference_values.py.

Uses only tests/oracles.py (mpmath series and quadrature, Lanczos gamma),
never the package.  Takes a few minutes; prints the module to stdout or
writes it with ``--write``.
"""

from __future__ import annotations

import argparse
import cmath
import math
import sys
from dataclasses import dataclass, field
from pathlib import Path

TESTS = Path(__file__).resolve().parent.parent / "tests"
sys.path.insert(0, str(TESTS))

import oracles  # noqa: E402


@dataclass
class FreezeConfig:
    dps: int = 60
    dps_large: int = 90
    alphas: tuple = (0.35, 0.4, 0.45, 0.5)
    g04_x: tuple = (0.5, 1.0, 2.0)
    g025_x: tuple = (0.25, 0.5, 1.0, 2.0, 4.0)
    theta_r: tuple = (1e-3, 0.1, 1.0, 10.0, 50.0)
    output: Path | None = field(default=None)


def compute(cfg: FreezeConfig) -> dict:
    v = {}
    v["GAMMA_1_4"] = oracles.lanczos_gamma(1.4)
    v["TWO_K0_2"] = oracles.bessel_product_quad(1.0)
    v["G04_OFF_AXIS"] = oracles.g_series(0.4, 2 * cmath.exp(0.6j * math.pi), cfg.dps)
    v["G04_CUT_R2"] = oracles.g_cut_series(0.4, 2.0, cfg.dps)
    v["G05_CUT_R4"] = oracles.g_cut_series(0.5, 4.0, cfg.dps)
    v["G_04_05_AT_10"] = oracles.density_series(0.4, 0.5, 10.0, cfg.dps)
    v["G_04"] = {x: oracles.density_series(0.4, 1.0, x, cfg.dps) for x in cfg.g04_x}
    v["G_025"] = {x: oracles.density_series(0.25, 1.0, x, cfg.dps_large) for x in cfg.g025_x}
    v["SMALL_Z"] = {a: 1e-5 ** a * oracles.g_series(a, 1e-5, cfg.dps).real
                    for a in cfg.alphas if a != 0.5}
    v["AT_100"] = {a: oracles.g_series(a, 100.0, cfg.dps_large).real for a in cfg.alphas}
    v["THETA_04"] = {r: -cmath.phase(oracles.g_cut_series(0.4, r, cfg.dps)) / math.pi
                     for r in cfg.theta_r}
    return v


def render(v: dict) -> str:
    lines = ['"""Values computed once with tests/oracles.py and frozen here.', "",
             "Regenerate with ``python3 scripts/freeze_oracles.py``.", '"""', ""]
    for name, value in v.items():
        lines.append(f"{name} = {value!r}")
    return "\n".join(lines) + "\n"


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--dps", type=int, default=FreezeConfig.dps)
    parser.add_argument("--write", action="store_true",
                        help="overwrite tests/reference_values.py")
    args = parser.parse_args(argv)
    cfg = FreezeConfig(dps=args.dps)
    text = render(compute(cfg))
    if args.write:
        (TESTS / "reference_values.py").write_text(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
