"""Scoring of system alignments against reference alignments.

Classification is exact key equality on (source, target, relation kind);
confidence never influences matching.  All functions here are pure, so
distinct (matcher, test case) pairs can be evaluated concurrently and the
results merged in any deterministic order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .alignio import Alignment, Correspondence, Key
from .ontology import OntologyIndex

__all__ = [
    "EvalOutcome", "GoldStandardCompleteness", "ConfusionCounts", "MetricSet",
    "BaselineMode", "BaselineConfig", "EmptyInputError", "BadIntervalError",
    "classify", "confusion", "metrics", "micro_average", "macro_average",
    "baseline_match", "residual_reference", "threshold",
]


class EvalOutcome(Enum):
    TRUE_POSITIVE = "TP"
    FALSE_POSITIVE = "FP"
    FALSE_NEGATIVE = "FN"


class GoldStandardCompleteness(Enum):
    """Whether the reference alignment is exhaustive for its ontology pair.

    With a PARTIAL gold standard, a system cell touching entities the
    reference never mentions is discarded instead of counted as a false
    positive.
    """

    COMPLETE = "complete"
    PARTIAL = "partial"


class EmptyInputError(ValueError):
    """Aggregation over an empty collection of confusion counts."""


class BadIntervalError(ValueError):
    """Confidence interval with lo > hi (or NaN endpoints)."""


@dataclass(frozen=True)
class ConfusionCounts:
    tp: int = 0
    fp: int = 0
    fn: int = 0

    def __add__(self, other: "ConfusionCounts") -> "ConfusionCounts":
        return ConfusionCounts(self.tp + other.tp, self.fp + other.fp,
                               self.fn + other.fn)


@dataclass(frozen=True)
class MetricSet:
    precision: float
    recall: float
    f1: float


def classify(system: Alignment, reference: Alignment,
             completeness: GoldStandardCompleteness =
             GoldStandardCompleteness.COMPLETE,
             ) -> list[tuple[Correspondence, EvalOutcome]]:
    """Label each cell as TP, FP, or FN against the reference.

    System cells whose key occurs in the reference are true positives and
    keep the system's confidence.  Reference cells missing from the system
    come back as false negatives carrying the reference's confidence.  The
    remaining system cells are false positives, except under a PARTIAL gold
    standard where cells touching no reference entity at all are dropped.
    """
    rows: list[tuple[Correspondence, EvalOutcome]] = []
    partial = completeness is GoldStandardCompleteness.PARTIAL
    if partial:
        reference_uris = set()
        for cell in reference:
            reference_uris.add(cell.source)
            reference_uris.add(cell.target)
    for cell in system:
        if cell.key in reference:
            rows.append((cell, EvalOutcome.TRUE_POSITIVE))
        elif (partial and cell.source not in reference_uris
              and cell.target not in reference_uris):
            continue
        else:
            rows.append((cell, EvalOutcome.FALSE_POSITIVE))
    for cell in reference:
        if cell.key not in system:
            rows.append((cell, EvalOutcome.FALSE_NEGATIVE))
    return rows


def confusion(rows: Iterable[tuple[Correspondence, EvalOutcome]],
              ) -> ConfusionCounts:
    """Tally classify() output into tp/fp/fn counts."""
    tp = fp = fn = 0
    for _, outcome in rows:
        if outcome is EvalOutcome.TRUE_POSITIVE:
            tp += 1
        elif outcome is EvalOutcome.FALSE_POSITIVE:
            fp += 1
        else:
            fn += 1
    return ConfusionCounts(tp, fp, fn)


def metrics(counts: ConfusionCounts) -> MetricSet:
    """Precision, recall, F1 with total (division-free) edge conventions.

    An empty system alignment scores precision 1.0 only when nothing was
    missed; an empty reference scores recall 1.0 only when nothing spurious
    was produced.  Empty vs. empty is a perfect score.
    """
    if counts.tp + counts.fp > 0:
        precision = counts.tp / (counts.tp + counts.fp)
    else:
        precision = 1.0 if counts.fn == 0 else 0.0
    if counts.tp + counts.fn > 0:
        recall = counts.tp / (counts.tp + counts.fn)
    else:
        recall = 1.0 if counts.fp == 0 else 0.0
    return MetricSet(precision, recall, _f1(precision, recall))


def _f1(precision: float, recall: float) -> float:
    if precision + recall == 0:
        return 0.0
    return 2 * precision * recall / (precision + recall)


def micro_average(counts: Sequence[ConfusionCounts]) -> MetricSet:
    """Metrics of the component-wise sum of the given counts."""
    if not counts:
        raise EmptyInputError("micro average of zero test cases")
    total = ConfusionCounts()
    for c in counts:
        total = total + c
    return metrics(total)


def macro_average(counts: Sequence[ConfusionCounts]) -> MetricSet:
    """Mean per-case precision and recall; F1 recomputed from those means.

    Deliberately not the mean of per-case F1 scores: both conventions exist,
    this one keeps F1 consistent with the published P and R columns.
    """
    if not counts:
        raise EmptyInputError("macro average of zero test cases")
    per_case = [metrics(c) for c in counts]
    precision = sum(m.precision for m in per_case) / len(per_case)
    recall = sum(m.recall for m in per_case) / len(per_case)
    return MetricSet(precision, recall, _f1(precision, recall))


class BaselineMode(Enum):
    """Which name sources the trivial string-equality matcher compares."""

    BOTH = "both"
    LABELS = "labels"
    LOCAL_NAMES = "localnames"


@dataclass(frozen=True)
class BaselineConfig:
    mode: BaselineMode = BaselineMode.BOTH
    case_sensitive: bool = False


def _baseline_values(index: OntologyIndex, uri: str,
                     config: BaselineConfig) -> list[str]:
    if config.mode is BaselineMode.LABELS:
        values = index.label_values.get(uri, [])
    elif config.mode is BaselineMode.LOCAL_NAMES:
        values = [index.labels_of(uri)[0]]
    else:
        values = index.labels_of(uri)
    normalized = []
    for value in values:
        value = value.strip()
        if not config.case_sensitive:
            value = value.lower()
        if value:
            normalized.append(value)
    return normalized


def baseline_match(left: OntologyIndex, right: OntologyIndex,
                   config: BaselineConfig = BaselineConfig()) -> Alignment:
    """Trivial matcher: equivalence wherever two entities share a name.

    Shared means a case-insensitive (unless configured otherwise),
    whitespace-trimmed string common to the two entities' name sets, which
    per ``config.mode`` are local names, rdfs:labels, or both.  Every match
    gets confidence 1.0.
    """
    by_value: dict[str, list[str]] = {}
    for uri in right.entities:
        for value in _baseline_values(right, uri, config):
            by_value.setdefault(value, []).append(uri)
    result = Alignment(onto1=left.origin, onto2=right.origin)
    for uri in left.entities:
        seen: set[str] = set()
        for value in _baseline_values(left, uri, config):
            for target in by_value.get(value, ()):
                if target not in seen:
                    seen.add(target)
                    result.add(Correspondence(uri, target))
    return result


def residual_reference(reference: Alignment, baseline: Alignment) -> set[Key]:
    """Keys of reference cells the baseline matcher does not find.

    These are the non-trivial part of the gold standard: a TP or FN row is
    residual exactly when its key lands in this set.
    """
    return reference.keys() - baseline.keys()


def threshold(alignment: Alignment, lo: float, hi: float) -> Alignment:
    """Cells with confidence in the closed interval [lo, hi]."""
    if math.isnan(lo) or math.isnan(hi) or lo > hi:
        raise BadIntervalError(f"bad confidence interval [{lo}, {hi}]")
    filtered = Alignment(onto1=alignment.onto1, onto2=alignment.onto2,
                         level=alignment.level, type=alignment.type)
    for cell in alignment:
        if lo <= cell.confidence <= hi:
            filtered.add(cell)
    return filtered
