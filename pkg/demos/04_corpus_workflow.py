"""Corpus workflow: auto-annotate, inspect distributions, split.

Mirrors the usual pipeline for bootstrapping a labeled dataset: run the
lexicon classifier over raw sentences, check how skewed the labels are,
then carve out a stratified test set.
"""

from toxlex import (
    AnnotatedSentence,
    auto_annotate,
    build_ontology,
    corpus_stats,
    load_lexicon,
    stratified_split,
)

LEXICON = """\
печка\ttoxic,nontoxic
badword\ttoxic
medword\ttoxic,medical
"""

RAW_SENTENCES = [
    "Купих нова печка.",
    "Ти си badword и половина.",
    "Лекарят спомена medword.",
    "Времето днес е чудесно.",
    "Отиваме на море през август.",
    "Какъв badword си само!",
    "Вечерята е готова.",
    "Купих хляб и мляко.",
    "Той пак каза badword.",
    "Днес е понеделник.",
]


def main():
    onto = build_ontology(load_lexicon(LEXICON))
    corpus = [AnnotatedSentence(text) for text in RAW_SENTENCES]

    annotated, summary = auto_annotate(corpus, onto)
    print("auto-annotation summary:", summary)
    for s in annotated:
        print(f"  [{s.label.token:>8}] {s.text}")

    stats = corpus_stats(annotated)
    print("\nlabel distribution:")
    for cls, share in stats.labels.items():
        print(f"  {cls.token:<9} {share.count:>2d}  ({share.fraction:.0%})")
    print("languages:", {lang: share.count for lang, share in stats.languages.items()})

    train, test = stratified_split(annotated, test_fraction=0.3, seed=7)
    print(f"\nsplit: {len(train)} train / {len(test)} test (seeded, reproducible)")
    for s in test:
        print(f"  test: [{s.label.token}] {s.text}")


if __name__ == "__main__":
    main()
