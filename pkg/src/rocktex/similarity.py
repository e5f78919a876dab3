"""Histogram dissimilarity metrics.

Both metrics return 0 for identical histograms and grow with divergence,
so they plug directly into nearest-class classification as distances.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

# How far a histogram's sum may drift from 1 before it is rejected.
_NORMALIZATION_TOL = 1e-6


class Metric(enum.Enum):
    HI = "hi"
    CHI2 = "chi2"


@dataclass(frozen=True)
class SimilarityScore:
    metric: Metric
    value: float


def _as_pair(h1, h2):
    h1 = np.asarray(h1, dtype=np.float64)
    h2 = np.asarray(h2, dtype=np.float64)
    if h1.ndim != 1 or h2.ndim != 1:
        raise ValueError("histograms must be 1-D vectors")
    if h1.shape != h2.shape:
        raise ValueError(f"histogram lengths differ: {h1.size} vs {h2.size}")
    return h1, h2


def hist_intersection(h1, h2) -> float:
    """Intersection dissimilarity ``1 - sum(min(h1, h2))``.

    Requires both inputs globally normalized (sum 1 within 1e-6); in
    return the value is guaranteed to lie in [0, 1], with 0 for identical
    histograms.
    """
    h1, h2 = _as_pair(h1, h2)
    for name, h in (("first", h1), ("second", h2)):
        total = float(h.sum())
        if abs(total - 1.0) > _NORMALIZATION_TOL:
            raise ValueError(
                f"{name} histogram is not normalized (sum {total!r}); "
                "metrics expect globally normalized descriptor vectors"
            )
    return float(1.0 - np.minimum(h1, h2).sum())


def chi_square(h1, h2) -> float:
    """Chi-square distance ``sum((h1 - h2)**2 / (h1 + h2))``.

    Entries must be nonnegative; bins where both histograms are zero
    contribute nothing (the expression's limit there is 0).
    """
    h1, h2 = _as_pair(h1, h2)
    if h1.min() < 0 or h2.min() < 0:
        raise ValueError("chi-square requires nonnegative histogram entries")
    num = (h1 - h2) ** 2
    den = h1 + h2
    terms = np.divide(num, den, out=np.zeros_like(num), where=den > 0)
    return float(terms.sum())


_METRIC_FN = {Metric.HI: hist_intersection, Metric.CHI2: chi_square}


def distance(metric: Metric, h1, h2) -> float:
    """Evaluate one metric by tag."""
    return _METRIC_FN[metric](h1, h2)


def score(metric: Metric, h1, h2) -> SimilarityScore:
    return SimilarityScore(metric, distance(metric, h1, h2))
