"""Seeded Monte Carlo drivers over Haar-random state tuples.

Samples are generated in fixed blocks of ``BLOCK`` consecutive indices.
Block ``b`` draws from a Philox stream keyed by the master seed with ``b``
in the top counter word, so every sample is a function of (seed, index)
alone and the ensemble does not depend on how blocks are spread over
workers.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import __version__
from .errors import ConfigError
from .states import bargmann_invariants_batch, haar_states, gram_batch
from .witness import WitnessMode, witnessed_batch

BLOCK = 1024
RNG_NAME = "numpy Philox4x64-10 (key=seed, top counter word=block), ziggurat normals"
WORKERS_ENV = "BARGMANN_WORKERS"
DEFAULT_SAMPLES = 100_000


def default_workers() -> int:
    raw = os.environ.get(WORKERS_ENV, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise ConfigError(f"{WORKERS_ENV}={raw!r} is not an integer") from None


@dataclass(frozen=True)
class ExperimentConfig:
    dim: int
    samples: int = DEFAULT_SAMPLES
    seed: int = 0
    workers: int = 1
    output_path: Path | None = None
    format: str = "csv"

    def __post_init__(self):
        if self.samples < 1:
            raise ConfigError("samples must be at least 1")
        if self.dim < 2:
            raise ConfigError("dim must be at least 2")
        if self.workers < 1:
            raise ConfigError("workers must be at least 1")
        if not 0 <= self.seed < 2**64:
            raise ConfigError("seed must be a 64-bit unsigned integer")
        if self.format not in ("csv", "json"):
            raise ConfigError(f"unknown format {self.format!r}")


def block_rng(seed: int, block: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(key=seed, counter=[0, 0, 0, block]))


def block_tuples(seed: int, block: int, count: int, n: int, d: int) -> np.ndarray:
    """Haar tuples for sample indices block*BLOCK .. block*BLOCK + count - 1."""
    return haar_states(block_rng(seed, block), (count, n), d)


def _blocks(samples: int) -> list[tuple[int, int]]:
    return [(b, min(BLOCK, samples - b * BLOCK)) for b in range((samples + BLOCK - 1) // BLOCK)]


def _scatter_block(args) -> np.ndarray:
    seed, block, count, order, dim = args
    return bargmann_invariants_batch(block_tuples(seed, block, count, order, dim))


def _overlap_rows(tuples: np.ndarray) -> np.ndarray:
    g = gram_batch(tuples)
    iu = np.triu_indices(tuples.shape[1], 1)
    return np.abs(g[:, iu[0], iu[1]]) ** 2


def _fraction_block(args) -> int:
    seed, block, count, dim, mode, tol = args
    rows = _overlap_rows(block_tuples(seed, block, count, 4, dim))
    return int(np.count_nonzero(witnessed_batch(rows, mode, tol)))


def _map(fn, tasks, workers: int):
    if workers == 1 or len(tasks) == 1:
        return [fn(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, tasks))


def run_scatter(config: ExperimentConfig, order: int) -> np.ndarray:
    """Invariants of ``config.samples`` Haar tuples of ``order`` states, by sample index."""
    if order < 2:
        raise ConfigError("order must be at least 2")
    tasks = [(config.seed, b, c, order, config.dim) for b, c in _blocks(config.samples)]
    return np.concatenate(_map(_scatter_block, tasks, config.workers))


@dataclass(frozen=True)
class FractionResult:
    dim: int
    samples: int
    witnessed_count: int
    seed: int

    @property
    def fraction(self) -> float:
        return self.witnessed_count / self.samples

    @property
    def binomial_sigma(self) -> float:
        p = self.fraction
        return float(np.sqrt(p * (1 - p) / self.samples))

    def to_dict(self) -> dict:
        return {
            "dim": self.dim,
            "samples": self.samples,
            "witnessed_count": self.witnessed_count,
            "fraction": self.fraction,
            "seed": self.seed,
        }


def run_fraction(
    config: ExperimentConfig, mode: WitnessMode | str = WitnessMode.GAUGE3, tol: float = 1e-9
) -> FractionResult:
    """Fraction of Haar 4-tuples whose overlaps alone witness set imaginarity."""
    mode = WitnessMode(mode)
    tasks = [(config.seed, b, c, config.dim, mode, tol) for b, c in _blocks(config.samples)]
    count = sum(_map(_fraction_block, tasks, config.workers))
    return FractionResult(config.dim, config.samples, count, config.seed)


def metadata(**extra) -> dict:
    out = {"tool": "bargmann", "version": __version__, "rng": RNG_NAME, "block": BLOCK}
    out.update(extra)
    return out
