"""Runtime of decide() as a function of word length."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

import numpy as np

from . import canonical
from .decider import decide


@dataclass
class ScalingConfig:
    lengths: tuple[int, ...] = (8, 16, 32, 64)
    pairs: int = 40
    letters: str = "xy"
    seed: int = 0


@dataclass
class ScalingResult:
    config: ScalingConfig
    seconds: dict[int, float] = field(default_factory=dict)   # median per pair

    @property
    def slope(self) -> float:
        """Least-squares slope of log(time) against log(length)."""
        n = np.array(sorted(self.seconds), dtype=float)
        t = np.array([self.seconds[int(k)] for k in n])
        return float(np.polyfit(np.log(n), np.log(t), 1)[0])

    def table(self) -> str:
        rows = ["length\tmedian_seconds"]
        rows += [f"{n}\t{self.seconds[n]:.6f}" for n in sorted(self.seconds)]
        return "\n".join(rows) + f"\nslope\t{self.slope:.3f}\n"


def measure_scaling(config: ScalingConfig | None = None) -> ScalingResult:
    config = config or ScalingConfig()
    rng = random.Random(config.seed)
    res = ScalingResult(config)
    for n in config.lengths:
        times = []
        for _ in range(config.pairs):
            u = "".join(rng.choice(config.letters) for _ in range(n))
            v = "".join(rng.choice(config.letters) for _ in range(n))
            canonical._canonicalize.cache_clear()
            t0 = time.perf_counter()
            decide(u, v)
            times.append(time.perf_counter() - t0)
        res.seconds[n] = float(np.median(times))
    return res
