"""Seeded random instances for property checks and experiment scripts."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import INF
from .oracle import enumerate_assignments


@dataclass(frozen=True)
class CorpusConfig:
    count: int = 300
    max_size: int = 6
    missing_rate: float = 0.2
    # every other instance gets missing edges
    missing_every: int = 2
    weight_span: int = 4  # distinct integers drawn from 1..span*n*m
    seed: int = 20240601


def has_assignment(w: np.ndarray) -> bool:
    return next(iter(enumerate_assignments(w)), None) is not None


def random_instance(rng: np.random.Generator, n: int, m: int, missing_rate: float = 0.0,
                    weight_span: int = 4) -> np.ndarray:
    """Distinct integer weights; resampled until a finite assignment exists."""
    while True:
        w = rng.permutation(weight_span * n * m)[: n * m].reshape(n, m) + 1.0
        if missing_rate > 0:
            w[rng.random((n, m)) < missing_rate] = INF
        if has_assignment(w):
            return w


def corpus(config: CorpusConfig = CorpusConfig()) -> list[np.ndarray]:
    rng = np.random.default_rng(config.seed)
    out = []
    for k in range(config.count):
        n = int(rng.integers(1, config.max_size + 1))
        m = int(rng.integers(1, n + 1))
        rate = config.missing_rate if k % config.missing_every else 0.0
        out.append(random_instance(rng, n, m, rate, config.weight_span))
    return out
