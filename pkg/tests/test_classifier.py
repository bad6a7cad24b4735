import random

import pytest

from toxlex.classifier import (
    DEFAULT_PRIORITY,
    Classification,
    classify,
    classify_batch,
    collapse,
    parse_priority,
)
from toxlex.ontology import BaseClass, Ontology

T = BaseClass.TOXIC
M = BaseClass.MEDICAL
N = BaseClass.NONTOXIC
G = BaseClass.MINORITY


class TestClassify:
    def test_ambiguous_word(self, fixture_ontology):
        result = classify("Купих нова печка.", fixture_ontology)
        assert result.labels == frozenset({T, N})
        assert [m.form for m in result.matches] == ["печка"]

    def test_default_nontoxic(self, fixture_ontology):
        result = classify("Здравей, свят", fixture_ontology)
        assert result.labels == frozenset({N})
        assert result.matches == ()

    def test_medical_word(self, fixture_ontology):
        result = classify("седалище на фирмата", fixture_ontology)
        assert result.labels == frozenset({N, M})

    def test_labels_union_over_matches(self, fixture_ontology):
        result = classify("badword и slurword", fixture_ontology)
        assert result.labels == frozenset({T, G})

    def test_negation_not_understood(self, fixture_ontology):
        # Known limitation, asserted as expected behavior: a negated
        # mention of a strictly toxic form still carries the toxic label.
        result = classify(
            "Като езиков модел, не мога да говоря за badword.", fixture_ontology
        )
        assert T in result.labels

    def test_empty_sentence(self, fixture_ontology):
        assert classify("", fixture_ontology).labels == frozenset({N})


class TestCollapse:
    def test_toxic_always_wins(self, fixture_ontology):
        c = classify("печка", fixture_ontology)
        assert c.labels == frozenset({T, N})
        assert collapse(c) is T

    def test_singleton(self, fixture_ontology):
        assert collapse(classify("нищо", fixture_ontology)) is N

    def test_default_priority_prefers_specific_over_nontoxic(self, fixture_ontology):
        result = classify("седалище", fixture_ontology)
        assert collapse(result) is M

    def test_custom_priority(self, fixture_ontology):
        result = classify("седалище", fixture_ontology)
        assert collapse(result, (N, G, M, T)) is N

    def test_priority_must_be_permutation(self, fixture_ontology):
        result = classify("badword", fixture_ontology)
        with pytest.raises(ValueError):
            collapse(result, (T, T, M, N))
        with pytest.raises(ValueError):
            collapse(result, (T, M))

    def test_any_toxic_first_priority_gives_toxic(self, fixture_ontology):
        result = classify("badword печка medword", fixture_ontology)
        for tail in [(M, G, N), (N, M, G), (G, N, M)]:
            assert collapse(result, (T, *tail)) is T


class TestClassificationInvariants:
    def test_rejects_empty_labels(self):
        with pytest.raises(ValueError):
            Classification(frozenset(), ())

    def test_rejects_matchless_non_default_labels(self):
        with pytest.raises(ValueError):
            Classification(frozenset({T}), ())

    def test_rejects_collapsed_outside_labels(self, fixture_ontology):
        result = classify("badword", fixture_ontology)
        with pytest.raises(ValueError):
            Classification(result.labels, result.matches, N)

    def test_to_dict_wire_format(self, fixture_ontology):
        result = classify_batch(["Купих нова печка."], fixture_ontology, single_label=True)[0]
        record = result.to_dict("Купих нова печка.")
        assert record == {
            "text": "Купих нова печка.",
            "labels": ["toxic", "nontoxic"],
            "collapsed": "toxic",
            "matches": [{"form": "печка", "token_start": 2, "token_end": 3}],
        }


class TestClassifyBatch:
    def test_elementwise_in_order(self, fixture_ontology):
        sentences = ["Купих нова печка.", "Здравей, свят", "седалище на фирмата"]
        results = classify_batch(sentences, fixture_ontology)
        assert [r.labels for r in results] == [
            frozenset({T, N}),
            frozenset({N}),
            frozenset({N, M}),
        ]

    def test_empty_sequence(self, fixture_ontology):
        assert classify_batch([], fixture_ontology) == []

    def test_repeated_sentence_identical_results(self, fixture_ontology):
        results = classify_batch(["badword е тук"] * 10_000, fixture_ontology)
        assert len(results) == 10_000
        assert all(r == results[0] for r in results)

    def test_single_label_sets_collapsed(self, fixture_ontology):
        results = classify_batch(
            ["Купих нова печка.", "нищо"], fixture_ontology, single_label=True
        )
        assert [r.collapsed for r in results] == [T, N]

    def test_batch_equals_single(self, fixture_ontology):
        sentences = ["badword", "нищо", "печка и седалище", ""]
        assert classify_batch(sentences, fixture_ontology) == [
            classify(s, fixture_ontology) for s in sentences
        ]


class TestMonotonicity:
    def test_adding_unrelated_individual_never_removes_labels(self, fixture_entries):
        rng = random.Random(99)
        vocabulary = ["печка", "badword", "нищо", "общо", "дума", "medword"]
        base = Ontology([(e.form, e.categories) for e in fixture_entries])
        for _ in range(200):
            sentence = " ".join(rng.choice(vocabulary) for _ in range(rng.randint(0, 6)))
            extra_form = "x" + str(rng.randint(0, 9))
            extra_classes = frozenset({rng.choice(list(BaseClass))})
            extended = Ontology(
                [(e.form, e.categories) for e in fixture_entries] + [(extra_form, extra_classes)]
            )
            before = classify(sentence, base).labels
            after = classify(sentence, extended).labels
            assert before <= after


def test_parse_priority():
    assert parse_priority("toxic,medical,minority,nontoxic") == DEFAULT_PRIORITY
    assert parse_priority("nontoxic, toxic, medical, minority")[0] is N
    with pytest.raises(ValueError):
        parse_priority("toxic,toxic,medical,nontoxic")
    with pytest.raises(ValueError):
        parse_priority("toxic")
    with pytest.raises(ValueError):
        parse_priority("toxic,medical,minority,bogus")
