"""Synthetic productivity distributions drawn from a truncated power law.

The law is p(x) = c_T * x**(-n) on the integer support 1..x_max, with
c_T chosen so the probabilities sum to one. Two generators exist: an
exact one that rounds expected counts to integers, and a sampling one
that draws authors independently and is bit-reproducible from its seed.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .corpus import ProductivityDistribution
from .errors import DataError, NumericError

__all__ = [
    "SynthSpec",
    "truncated_constant",
    "truncated_probabilities",
    "sample_distribution",
    "exact_distribution",
]


@dataclass(frozen=True)
class SynthSpec:
    """Parameters of one synthetic draw: law, size, support, seed."""

    n: float
    author_count: int
    x_max: int
    seed: int

    def __post_init__(self) -> None:
        _validate_law(self.n, self.x_max)
        if self.author_count < 1:
            raise DataError(f"author_count must be >= 1, got {self.author_count}")
        if not 0 <= self.seed < 2**64:
            raise DataError(f"seed must be a 64-bit unsigned integer, got {self.seed}")


def _validate_law(n: float, x_max: int) -> None:
    if x_max < 2:
        raise DataError(f"x_max must be >= 2, got {x_max}")
    if n <= 1.0:
        raise DataError(f"exponent must exceed 1, got {n}")


def truncated_constant(n: float, x_max: int) -> float:
    """Normalizer of the truncated law: 1 / sum_{x=1..x_max} x**(-n)."""
    _validate_law(n, x_max)
    return 1.0 / float((np.arange(1, x_max + 1, dtype=np.float64) ** -n).sum())


def truncated_probabilities(n: float, x_max: int) -> np.ndarray:
    """Probability vector over 1..x_max, summing to exactly 1.0.

    The last entry absorbs the float rounding remainder so downstream
    cumulative sums end at 1.0 exactly.
    """
    _validate_law(n, x_max)
    p = np.arange(1, x_max + 1, dtype=np.float64) ** -n
    p /= p.sum()
    p[-1] = 1.0 - p[:-1].sum()
    return p


def sample_distribution(spec: SynthSpec) -> ProductivityDistribution:
    """Draw author productivities independently from the truncated law.

    Reproducibility contract: the stream is numpy's PCG64 generator
    seeded with ``spec.seed``; ``author_count`` uniform float64 values
    are drawn in one call and mapped through the inverse CDF by a
    right-side bisect on the cumulative probability vector. PCG64's bit
    stream and the uniform-double conversion are stable across platforms
    and numpy releases, so one spec always yields one table.
    """
    p = truncated_probabilities(spec.n, spec.x_max)
    cdf = np.cumsum(p)
    cdf[-1] = 1.0
    rng = np.random.Generator(np.random.PCG64(spec.seed))
    u = rng.random(spec.author_count)
    draws = np.searchsorted(cdf, u, side="right") + 1
    counts = np.bincount(draws, minlength=spec.x_max + 1)
    points = tuple((int(x), int(counts[x])) for x in range(1, spec.x_max + 1) if counts[x])
    return ProductivityDistribution(points, provenance=f"sampled:seed={spec.seed}")


def exact_distribution(n: float, author_count: int, x_max: int) -> ProductivityDistribution:
    """Noiseless table: expected counts rounded to nearest integers.

    Zero rows are dropped. If every row rounds to zero the requested
    corpus is too small to represent the law and NumericError is raised.
    """
    if author_count < 1:
        raise DataError(f"author_count must be >= 1, got {author_count}")
    p = truncated_probabilities(n, x_max)
    y = np.rint(author_count * p).astype(np.int64)
    points = tuple((int(x + 1), int(y[x])) for x in range(x_max) if y[x] > 0)
    if not points:
        raise NumericError(
            "all expected counts round to zero; increase author_count or the exponent"
        )
    return ProductivityDistribution(points, provenance="exact")
