"""Shared fixtures and independent oracles for the test suite."""

from __future__ import annotations

import random

import pytest

from toxlex.lexicon import build_ontology, load_lexicon
from toxlex.ontology import And, Base, BaseClass, ClassExpr, Not, Or

# Five-entry lexicon used across the suite: the two genuinely ambiguous
# Bulgarian words plus offense-free placeholders for strictly toxic,
# toxic-medical, and toxic-minority entries.
FIXTURE_LEXICON_TSV = """\
# test fixture lexicon
печка\ttoxic,nontoxic
седалище\tnontoxic,medical
badword\ttoxic
medword\ttoxic,medical
slurword\ttoxic,minority
"""

ALL_MEMBERSHIP_SETS: list[frozenset[BaseClass]] = [
    frozenset(c for c, bit in zip(BaseClass, bits) if bit)
    for bits in [
        tuple((i >> shift) & 1 for shift in range(4))
        for i in range(16)
    ]
]


@pytest.fixture
def fixture_entries():
    return load_lexicon(FIXTURE_LEXICON_TSV)


@pytest.fixture
def fixture_ontology(fixture_entries):
    return build_ontology(fixture_entries)


def random_memberships(rng: random.Random) -> frozenset[BaseClass]:
    return frozenset(c for c in BaseClass if rng.random() < 0.5)


def random_expr(rng: random.Random, depth: int = 3) -> ClassExpr:
    """Random well-formed class expression of bounded depth."""
    if depth == 0 or rng.random() < 0.35:
        return Base(rng.choice(list(BaseClass)))
    kind = rng.choice(["and", "or", "not"])
    if kind == "not":
        return Not(random_expr(rng, depth - 1))
    children = [random_expr(rng, depth - 1) for _ in range(rng.randint(2, 3))]
    return (And if kind == "and" else Or)(*children)


def oracle_report(gold, pred, macro_all_classes=False):
    """Brute-force tp/fp/fn report, independent of the library path.

    Returns (per_class, macro, weighted, accuracy) where per_class maps
    each class to (precision, recall, f1, support) and the averages are
    (precision, recall, f1) triples.
    """
    classes = list(BaseClass)
    per = {}
    predicted_counts = {}
    for c in classes:
        tp = fp = fn = 0
        for g, p in zip(gold, pred):
            if p is c and g is c:
                tp += 1
            elif p is c:
                fp += 1
            elif g is c:
                fn += 1
        precision = tp / (tp + fp) if tp + fp else 0.0
        recall = tp / (tp + fn) if tp + fn else 0.0
        f1 = 2 * precision * recall / (precision + recall) if precision + recall else 0.0
        per[c] = (precision, recall, f1, tp + fn)
        predicted_counts[c] = tp + fp

    if macro_all_classes:
        included = classes
    else:
        included = [c for c in classes if per[c][3] > 0 or predicted_counts[c] > 0]
    macro = tuple(sum(per[c][i] for c in included) / len(included) for i in range(3))
    total = len(gold)
    weighted = tuple(sum(per[c][i] * per[c][3] for c in classes) / total for i in range(3))
    accuracy = sum(1 for g, p in zip(gold, pred) if g is p) / total
    return per, macro, weighted, accuracy
