"""Single-label classification reports.

Per-class precision, recall and F1 with supports, macro and weighted
averages, accuracy, and the underlying confusion matrix.  Zero
denominators yield a metric of 0, which matters here because minority
classes routinely end up with no true positives at all.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from .ontology import CLASS_ORDER, BaseClass

_INDEX = {c: i for i, c in enumerate(CLASS_ORDER)}


@dataclass(frozen=True)
class ClassMetrics:
    precision: float
    recall: float
    f1: float
    support: int


@dataclass(frozen=True)
class Averages:
    precision: float
    recall: float
    f1: float


@dataclass(frozen=True)
class LabelShare:
    count: int
    fraction: float


@dataclass(frozen=True)
class EvalReport:
    """Full report over the four base classes.

    ``confusion`` is a 4x4 int array indexed (gold, predicted) in
    canonical class order.  ``macro_over`` records which classes the
    macro average ran over.
    """

    per_class: Mapping[BaseClass, ClassMetrics]
    macro: Averages
    weighted: Averages
    accuracy: float
    confusion: np.ndarray
    macro_over: tuple[BaseClass, ...]

    def to_dict(self) -> dict:
        return {
            "per_class": {
                c.display: {
                    "precision": m.precision,
                    "recall": m.recall,
                    "f1": m.f1,
                    "support": m.support,
                }
                for c, m in self.per_class.items()
            },
            "macro": {"precision": self.macro.precision, "recall": self.macro.recall, "f1": self.macro.f1},
            "weighted": {"precision": self.weighted.precision, "recall": self.weighted.recall, "f1": self.weighted.f1},
            "accuracy": self.accuracy,
            "macro_over": [c.display for c in self.macro_over],
            "confusion": {
                "classes": [c.display for c in CLASS_ORDER],
                "matrix": self.confusion.tolist(),
            },
        }

    def render_text(self) -> str:
        """Human-readable table: class rows, then macro and weighted
        average rows, then accuracy.  Metrics shown to 2 decimals."""
        total = int(self.confusion.sum())
        width = max(len(c.display) for c in CLASS_ORDER) + 2
        header = f"{'Class':<{width}}{'Precision':>10}{'Recall':>10}{'F1-score':>10}{'Support':>10}"
        lines = [header]
        for c in CLASS_ORDER:
            m = self.per_class[c]
            lines.append(
                f"{c.display:<{width}}{m.precision:>10.2f}{m.recall:>10.2f}{m.f1:>10.2f}{m.support:>10d}"
            )
        lines.append(
            f"{'Macro Average':<{width}}{self.macro.precision:>10.2f}{self.macro.recall:>10.2f}"
            f"{self.macro.f1:>10.2f}{total:>10d}"
        )
        lines.append(
            f"{'Weighted Average':<{width}}{self.weighted.precision:>10.2f}{self.weighted.recall:>10.2f}"
            f"{self.weighted.f1:>10.2f}{total:>10d}"
        )
        lines.append(f"{'Accuracy':<{width}}{self.accuracy:>10.2f}")
        return "\n".join(lines)


def confusion_matrix(gold: Sequence[BaseClass], pred: Sequence[BaseClass]) -> np.ndarray:
    """4x4 (gold, predicted) counts in canonical class order."""
    matrix = np.zeros((len(CLASS_ORDER), len(CLASS_ORDER)), dtype=np.int64)
    for g, p in zip(gold, pred):
        matrix[_INDEX[g], _INDEX[p]] += 1
    return matrix


def classification_report(
    gold: Sequence[BaseClass],
    pred: Sequence[BaseClass],
    *,
    macro_all_classes: bool = False,
) -> EvalReport:
    """Compute the full report for aligned gold/predicted label sequences.

    By default the macro average runs over classes that appear in the
    gold labels or the predictions; ``macro_all_classes`` averages over
    all four fixed classes instead.  The weighted average is always
    support-weighted over the gold labels.  Raises ``ValueError`` on
    empty input or length mismatch.
    """
    gold = list(gold)
    pred = list(pred)
    if not gold:
        raise ValueError("cannot evaluate an empty label sequence")
    if len(gold) != len(pred):
        raise ValueError(f"gold has {len(gold)} labels but predictions have {len(pred)}")

    matrix = confusion_matrix(gold, pred)
    tp = np.diag(matrix).astype(np.float64)
    support = matrix.sum(axis=1)
    predicted = matrix.sum(axis=0)
    fp = predicted.astype(np.float64) - tp
    fn = support.astype(np.float64) - tp

    precision = np.divide(tp, tp + fp, out=np.zeros_like(tp), where=(tp + fp) > 0)
    recall = np.divide(tp, tp + fn, out=np.zeros_like(tp), where=(tp + fn) > 0)
    pr_sum = precision + recall
    f1 = np.divide(2 * precision * recall, pr_sum, out=np.zeros_like(tp), where=pr_sum > 0)

    if macro_all_classes:
        included = np.ones(len(CLASS_ORDER), dtype=bool)
    else:
        included = (support > 0) | (predicted > 0)
    macro = Averages(
        float(precision[included].mean()),
        float(recall[included].mean()),
        float(f1[included].mean()),
    )
    weights = support.astype(np.float64)
    weighted = Averages(
        float(np.average(precision, weights=weights)),
        float(np.average(recall, weights=weights)),
        float(np.average(f1, weights=weights)),
    )

    per_class = {
        c: ClassMetrics(float(precision[i]), float(recall[i]), float(f1[i]), int(support[i]))
        for i, c in enumerate(CLASS_ORDER)
    }
    return EvalReport(
        per_class=per_class,
        macro=macro,
        weighted=weighted,
        accuracy=float(tp.sum() / matrix.sum()),
        confusion=matrix,
        macro_over=tuple(c for i, c in enumerate(CLASS_ORDER) if included[i]),
    )


def label_distribution(labels: Sequence[BaseClass]) -> dict[BaseClass, LabelShare]:
    """Per-class count and fraction of the sequence.

    Counts sum to the sequence length; fractions sum to 1 for non-empty
    input and are all 0 for empty input.
    """
    total = len(labels)
    counts = {c: 0 for c in CLASS_ORDER}
    for label in labels:
        counts[label] += 1
    return {
        c: LabelShare(n, n / total if total else 0.0)
        for c, n in counts.items()
    }
