"""Sentence classification against an ontology of annotated forms.

A sentence's labels are the union of base-class memberships of every
lexicon form found in it.  A sentence with no lexicon hits defaults to
the non-toxic label.  Classification is exact-match only: negation and
other grammar is not understood, so "could not talk about <toxic word>"
still carries the toxic label.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from typing import Iterable, Sequence

from .ontology import CLASS_ORDER, BaseClass, Ontology
from .textproc import MatchSpan, match_phrases, tokenize

#: Collapse priority: toxic always wins; the specific categories beat the
#: non-toxic catch-all; the order between them is configurable.
DEFAULT_PRIORITY: tuple[BaseClass, ...] = (
    BaseClass.TOXIC,
    BaseClass.MEDICAL,
    BaseClass.MINORITY,
    BaseClass.NONTOXIC,
)


@dataclass(frozen=True)
class Classification:
    """Categories detected in one sentence, with match evidence.

    ``labels`` is never empty (the default rule guarantees a non-toxic
    label when nothing matched).  ``collapsed`` is set only when a
    single-label reduction was requested and is always one of ``labels``.
    """

    labels: frozenset[BaseClass]
    matches: tuple[MatchSpan, ...]
    collapsed: BaseClass | None = None

    def __post_init__(self):
        if not self.labels:
            raise ValueError("labels must not be empty")
        if not self.matches and self.labels != frozenset({BaseClass.NONTOXIC}):
            raise ValueError("a match-free classification must be labeled nontoxic only")
        if self.collapsed is not None and self.collapsed not in self.labels:
            raise ValueError("collapsed label must be one of the detected labels")

    def to_dict(self, text: str | None = None) -> dict:
        """JSON-ready record; labels serialized as lowercase wire tokens
        in canonical class order."""
        record = {
            "labels": [c.token for c in CLASS_ORDER if c in self.labels],
            "collapsed": self.collapsed.token if self.collapsed else None,
            "matches": [
                {"form": m.form, "token_start": m.token_start, "token_end": m.token_end}
                for m in self.matches
            ],
        }
        if text is not None:
            record = {"text": text, **record}
        return record


def classify(sentence: str, onto: Ontology) -> Classification:
    """Detect categories present in ``sentence``.

    Labels are the union of memberships of all matched individuals; with
    no match the sentence is assumed non-toxic.
    """
    matches = tuple(match_phrases(tokenize(sentence), onto))
    if not matches:
        return Classification(frozenset({BaseClass.NONTOXIC}), ())
    labels: set[BaseClass] = set()
    for span in matches:
        labels |= onto.memberships(span.form)
    return Classification(frozenset(labels), matches)


def collapse(
    classification: Classification,
    priority: Sequence[BaseClass] = DEFAULT_PRIORITY,
) -> BaseClass:
    """Reduce a multi-label classification to its highest-priority label.

    ``priority`` must be a permutation of the four base classes.
    """
    if set(priority) != set(BaseClass) or len(priority) != len(CLASS_ORDER):
        raise ValueError("priority must be a permutation of the four base classes")
    for cls in priority:
        if cls in classification.labels:
            return cls
    raise AssertionError("unreachable: labels are never empty")


def classify_batch(
    sentences: Iterable[str],
    onto: Ontology,
    *,
    single_label: bool = False,
    priority: Sequence[BaseClass] = DEFAULT_PRIORITY,
) -> list[Classification]:
    """Classify each sentence, preserving input order.

    With ``single_label`` the collapse heuristic fills ``collapsed`` on
    every result.
    """
    results = []
    for sentence in sentences:
        c = classify(sentence, onto)
        if single_label:
            c = dataclasses.replace(c, collapsed=collapse(c, priority))
        results.append(c)
    return results


def parse_priority(value: str) -> tuple[BaseClass, ...]:
    """Parse a comma-separated priority override such as
    ``toxic,medical,minority,nontoxic``; must name all four classes once."""
    classes = tuple(BaseClass.from_token(t.strip()) for t in value.split(","))
    if len(classes) != len(CLASS_ORDER) or set(classes) != set(BaseClass):
        raise ValueError("priority must list each of the four category tokens exactly once")
    return classes
