"""Annotated corpus I/O, automatic annotation, and splitting.

Corpora are JSONL: one object per line with a required non-empty
``text``, an optional ``label`` (lowercase category token), and an
optional ``source`` provenance tag.  Records are single-label; multi-
label sentences are out of scope for corpus storage.
"""

from __future__ import annotations

import json
import logging
import random
from dataclasses import dataclass
from typing import IO, Iterable, Sequence

from .classifier import DEFAULT_PRIORITY, classify_batch
from .evaluation import LabelShare, label_distribution
from .ontology import CLASS_ORDER, BaseClass, Ontology
from .textproc import identify_language

logger = logging.getLogger(__name__)


class CorpusParseError(ValueError):
    """A malformed corpus line; carries the 1-based line number."""

    def __init__(self, message: str, line_number: int):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


@dataclass(frozen=True)
class AnnotatedSentence:
    text: str
    label: BaseClass | None = None
    source: str | None = None

    def __post_init__(self):
        if not self.text:
            raise ValueError("sentence text must not be empty")

    def to_record(self) -> dict:
        record: dict = {"text": self.text}
        if self.label is not None:
            record["label"] = self.label.token
        if self.source is not None:
            record["source"] = self.source
        return record


def load_corpus(source: str | IO[str] | Iterable[str]) -> list[AnnotatedSentence]:
    """Parse corpus JSONL, preserving input order.

    Raises :class:`CorpusParseError` with the line number for invalid
    JSON, missing/empty text, or an unknown label token.  A ``label`` of
    ``null`` counts as absent.
    """
    lines = source.splitlines() if isinstance(source, str) else source
    sentences: list[AnnotatedSentence] = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line:
            continue
        try:
            record = json.loads(line)
        except json.JSONDecodeError as exc:
            raise CorpusParseError(f"invalid JSON: {exc.msg}", lineno) from None
        if not isinstance(record, dict):
            raise CorpusParseError("each line must hold a JSON object", lineno)
        text = record.get("text")
        if not isinstance(text, str) or not text:
            raise CorpusParseError("missing or empty 'text'", lineno)
        label_token = record.get("label")
        label = None
        if label_token is not None:
            if not isinstance(label_token, str):
                raise CorpusParseError("'label' must be a string", lineno)
            try:
                label = BaseClass.from_token(label_token)
            except ValueError as exc:
                raise CorpusParseError(str(exc), lineno) from None
        source_tag = record.get("source")
        if source_tag is not None and not isinstance(source_tag, str):
            raise CorpusParseError("'source' must be a string", lineno)
        sentences.append(AnnotatedSentence(text, label, source_tag))
    return sentences


def save_corpus(sentences: Iterable[AnnotatedSentence], stream: IO[str]) -> None:
    """Write sentences as corpus JSONL (one compact object per line)."""
    for s in sentences:
        stream.write(json.dumps(s.to_record(), ensure_ascii=False) + "\n")


def auto_annotate(
    sentences: Sequence[AnnotatedSentence],
    onto: Ontology,
    *,
    priority: Sequence[BaseClass] = DEFAULT_PRIORITY,
) -> tuple[list[AnnotatedSentence], dict]:
    """Label every sentence with the collapsed classifier output.

    Existing labels are replaced.  The summary reports the total, the
    number of sentences labeled anything other than non-toxic, and the
    per-label counts.
    """
    results = classify_batch((s.text for s in sentences), onto, single_label=True, priority=priority)
    annotated = [
        AnnotatedSentence(s.text, c.collapsed, s.source)
        for s, c in zip(sentences, results)
    ]
    by_label = {c.token: 0 for c in CLASS_ORDER}
    for s in annotated:
        by_label[s.label.token] += 1
    summary = {
        "total": len(annotated),
        "non_nontoxic": len(annotated) - by_label[BaseClass.NONTOXIC.token],
        "by_label": by_label,
    }
    return annotated, summary


def stratified_split(
    sentences: Sequence[AnnotatedSentence],
    test_fraction: float,
    seed: int,
) -> tuple[list[AnnotatedSentence], list[AnnotatedSentence]]:
    """Split a fully labeled corpus into (train, test) by label stratum.

    Each label contributes ``round(count * test_fraction)`` sentences to
    the test side, chosen by a shuffle seeded from ``seed``, so the same
    inputs always produce the same split.  Both halves keep the original
    corpus order.  A stratum whose share rounds to zero is warned about
    and left entirely in train.
    """
    if not 0 < test_fraction < 1:
        raise ValueError("test_fraction must be strictly between 0 and 1")
    strata: dict[BaseClass, list[int]] = {c: [] for c in CLASS_ORDER}
    for i, s in enumerate(sentences):
        if s.label is None:
            raise ValueError(f"sentence {i} is unlabeled; stratified_split needs labels")
        strata[s.label].append(i)

    rng = random.Random(seed)
    test_indices: set[int] = set()
    for cls in CLASS_ORDER:
        indices = strata[cls]
        if not indices:
            continue
        take = round(len(indices) * test_fraction)
        if take == 0:
            logger.warning(
                "label %s has %d sentences; test share rounds to zero", cls.token, len(indices)
            )
            continue
        shuffled = indices[:]
        rng.shuffle(shuffled)
        test_indices.update(shuffled[:take])

    train = [s for i, s in enumerate(sentences) if i not in test_indices]
    test = [s for i, s in enumerate(sentences) if i in test_indices]
    return train, test


@dataclass(frozen=True)
class CorpusStats:
    """Label and language distributions over a corpus."""

    total: int
    unlabeled: int
    labels: dict[BaseClass, LabelShare]
    languages: dict[str, LabelShare]

    def to_dict(self) -> dict:
        return {
            "total": self.total,
            "unlabeled": self.unlabeled,
            "labels": {c.token: {"count": s.count, "fraction": s.fraction} for c, s in self.labels.items()},
            "languages": {lang: {"count": s.count, "fraction": s.fraction} for lang, s in self.languages.items()},
        }


def corpus_stats(sentences: Sequence[AnnotatedSentence]) -> CorpusStats:
    """Label distribution (over labeled sentences) plus per-sentence
    language distribution."""
    labeled = [s.label for s in sentences if s.label is not None]
    total = len(sentences)
    language_counts: dict[str, int] = {}
    for s in sentences:
        tag = identify_language(s.text)
        language_counts[tag] = language_counts.get(tag, 0) + 1
    languages = {
        tag: LabelShare(n, n / total if total else 0.0)
        for tag, n in sorted(language_counts.items())
    }
    return CorpusStats(
        total=total,
        unlabeled=total - len(labeled),
        labels=label_distribution(labeled),
        languages=languages,
    )
