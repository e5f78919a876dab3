"""Nearest-class-mean classification and its evaluation indicators.

Classification assigns a query to the class whose members have the
smallest mean distance to it (median selectable), with leave-one-out
support for evaluating a corpus against itself.  The confusion matrix is
then condensed into one-vs-rest tallies — for each class in turn, that
class is "positive" and all others "negative", and the four counts are
summed over classes — from which sensitivity, specificity, precision,
accuracy and error rate follow.

Indicators whose denominator is zero are reported as ``None`` rather
than 0, so an undefined rate can never masquerade as a terrible one.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .similarity import Metric, distance

_AGGREGATES = {"mean": np.mean, "median": np.median}


@dataclass(frozen=True)
class LabeledCorpus:
    """Class names plus (class index, descriptor record) items.

    Class indices refer to positions in ``classes``.  Leave-one-out
    evaluation needs at least two items in every class.
    """

    classes: tuple
    items: tuple  # of (class index, DescriptorRecord)

    def __post_init__(self):
        k = len(self.classes)
        if k < 2:
            raise ValueError("corpus needs at least 2 classes")
        counts = np.zeros(k, dtype=np.int64)
        for label, _record in self.items:
            if not 0 <= label < k:
                raise ValueError(f"class index {label} out of range for {k} classes")
            counts[label] += 1
        low = [self.classes[i] for i in range(k) if counts[i] < 2]
        if low:
            raise ValueError(f"every class needs >= 2 items; too few in: {', '.join(low)}")

    @property
    def labels(self) -> np.ndarray:
        return np.array([label for label, _ in self.items], dtype=np.int64)

    @property
    def vectors(self) -> np.ndarray:
        return np.stack([record.vector for _, record in self.items])


@dataclass(frozen=True)
class BinaryTallies:
    """One-vs-rest decision counts summed over classes."""

    vp: int  # true positives
    fp: int  # false positives
    vn: int  # true negatives
    fn: int  # false negatives

    @property
    def total(self) -> int:
        return self.vp + self.fp + self.vn + self.fn


@dataclass(frozen=True)
class ClassifierMetrics:
    """Eq.-style indicators; ``None`` marks an undefined (0/0) rate."""

    sensitivity: Optional[float]
    specificity: Optional[float]
    precision: Optional[float]
    accuracy: Optional[float]
    error_rate: Optional[float]


@dataclass(frozen=True)
class ClassReport:
    """Per-class one-vs-rest tallies and accuracy indicators."""

    name: str
    vp: int
    fp: int
    vn: int
    fn: int
    accuracy: Optional[float]
    positive_accuracy: Optional[float]
    negative_accuracy: Optional[float]


def _class_distances(query_vector, corpus: LabeledCorpus, metric: Metric,
                     aggregate: str, exclude: Optional[int]) -> np.ndarray:
    agg = _AGGREGATES[aggregate]
    k = len(corpus.classes)
    per_class = [[] for _ in range(k)]
    for idx, (label, record) in enumerate(corpus.items):
        if idx == exclude:
            continue
        per_class[label].append(distance(metric, query_vector, record.vector))
    out = np.empty(k)
    for c in range(k):
        if not per_class[c]:
            raise ValueError(f"class {corpus.classes[c]} has no members to compare against")
        out[c] = agg(per_class[c])
    return out


def classify(query, corpus: LabeledCorpus, metric: Metric = Metric.HI,
             aggregate: str = "mean", exclude: Optional[int] = None) -> int:
    """Index of the class with the smallest aggregated distance to ``query``.

    ``query`` is a DescriptorRecord or a bare vector.  ``exclude`` drops
    one corpus item (by position) for leave-one-out runs.  Ties go to the
    lowest class index.
    """
    if aggregate not in _AGGREGATES:
        raise ValueError(f"aggregate must be one of {sorted(_AGGREGATES)}, got {aggregate!r}")
    vector = getattr(query, "vector", query)
    dists = _class_distances(vector, corpus, metric, aggregate, exclude)
    return int(np.argmin(dists))


def confusion(corpus: LabeledCorpus, metric: Metric = Metric.HI,
              aggregate: str = "mean") -> np.ndarray:
    """Leave-one-out confusion matrix: rows true class, columns predicted."""
    k = len(corpus.classes)
    cm = np.zeros((k, k), dtype=np.int64)
    for idx, (label, record) in enumerate(corpus.items):
        predicted = classify(record, corpus, metric, aggregate, exclude=idx)
        cm[label, predicted] += 1
    return cm


def binary_tallies(cm: np.ndarray) -> BinaryTallies:
    """Collapse a confusion matrix into summed one-vs-rest tallies.

    For each class c: VP_c is the diagonal cell, FN_c the rest of row c,
    FP_c the rest of column c, and VN_c everything else; the four counts
    are summed over all classes.
    """
    cm = np.asarray(cm, dtype=np.int64)
    if cm.ndim != 2 or cm.shape[0] != cm.shape[1]:
        raise ValueError(f"confusion matrix must be square, got shape {cm.shape}")
    if cm.min() < 0:
        raise ValueError("confusion matrix counts cannot be negative")
    k = cm.shape[0]
    total = int(cm.sum())
    vp = int(np.trace(cm))
    fn = int(cm.sum() - np.trace(cm))
    fp = fn  # every off-diagonal cell is one miss for its row, one false hit for its column
    vn = k * total - vp - fp - fn
    return BinaryTallies(vp=vp, fp=fp, vn=vn, fn=fn)


def _ratio(num: int, den: int) -> Optional[float]:
    return num / den if den > 0 else None


def metrics(t: BinaryTallies) -> ClassifierMetrics:
    """Sensitivity, specificity, precision, accuracy and error rate."""
    accuracy = _ratio(t.vp + t.vn, t.total)
    return ClassifierMetrics(
        sensitivity=_ratio(t.vp, t.vp + t.fn),
        specificity=_ratio(t.vn, t.vn + t.fp),
        precision=_ratio(t.vp, t.vp + t.fp),
        accuracy=accuracy,
        error_rate=None if accuracy is None else 1.0 - accuracy,
    )


def per_class_report(cm: np.ndarray, class_names=None) -> list:
    """One-vs-rest report rows, one per class.

    Per class: accuracy = (VP+VN)/total decisions, positive accuracy =
    VP/(VP+FP), negative accuracy = VN/(VN+FN).
    """
    cm = np.asarray(cm, dtype=np.int64)
    if cm.ndim != 2 or cm.shape[0] != cm.shape[1]:
        raise ValueError(f"confusion matrix must be square, got shape {cm.shape}")
    k = cm.shape[0]
    if class_names is None:
        class_names = [f"class_{c + 1}" for c in range(k)]
    if len(class_names) != k:
        raise ValueError(f"{len(class_names)} names for {k} classes")
    total = int(cm.sum())
    rows = []
    for c in range(k):
        vp = int(cm[c, c])
        fn = int(cm[c].sum() - vp)
        fp = int(cm[:, c].sum() - vp)
        vn = total - vp - fn - fp
        rows.append(ClassReport(
            name=str(class_names[c]),
            vp=vp, fp=fp, vn=vn, fn=fn,
            accuracy=_ratio(vp + vn, total),
            positive_accuracy=_ratio(vp, vp + fp),
            negative_accuracy=_ratio(vn, vn + fn),
        ))
    return rows
