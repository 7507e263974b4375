"""Measure the constants that fix the normalizations and write them as JSON.

For each alpha this records the small-z limit of ``x^a G(x)`` next to both
candidate constants, the large-z limit of ``G(x) x^{1/2} e^{delta x}`` next
to both prefactors, and, at alpha = 1/2, which Levy closed form the
defining integral reproduces.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from stablehcm import galpha
from stablehcm import stable_density as sd
from stablehcm.galpha import SlitPoint


@dataclass
class NormalizationConfig:
    alphas: tuple = (0.35, 0.4, 0.45, 0.5)
    small_x: float = 1e-5
    large_x: float = 200.0
    output: Path = Path("results/constants.json")


def measure(cfg: NormalizationConfig) -> dict:
    out = {"alphas": {}}
    for a in cfg.alphas:
        k = galpha.constants(a)
        small = cfg.small_x ** a * galpha.evaluate(a, SlitPoint(cfg.small_x), "series").real
        v = galpha.evaluate_log(a, SlitPoint(cfg.large_x), "integral")
        large = math.exp(v.log_mod + 0.5 * math.log(cfg.large_x) + k.delta * cfg.large_x)
        out["alphas"][str(a)] = {
            "delta": k.delta,
            "small_z_measured": small,
            "small_z_sin_pi_a": galpha.small_z_constant(a),
            "small_z_sin_2pi_a": galpha.small_z_constant_printed(a),
            "large_z_measured": large,
            "c_unscaled": k.c_paper,
            "c_over_sqrt_2pi": k.c_adopted,
        }
    x = np.geomspace(0.1, 20.0, 25)
    exact = sd.density_integral(sd.StableParams(0.5), x)
    out["levy"] = {
        "max_rel_err_exp_minus_sqrt_lambda": float(np.max(np.abs(sd.levy_density(x) / exact - 1))),
        "max_rel_err_exp_minus_sqrt_2lambda":
            float(np.max(np.abs(sd.levy_density_alt(x) / exact - 1))),
    }
    return out


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--output", type=Path, default=NormalizationConfig.output)
    args = parser.parse_args(argv)
    cfg = NormalizationConfig(output=args.output)
    doc = measure(cfg)
    cfg.output.parent.mkdir(parents=True, exist_ok=True)
    cfg.output.write_text(json.dumps(doc, indent=2) + "\n")
    print(json.dumps(doc, indent=2))
    return 0


if __name__ == "__main__":
    sys.exit(main())
