"""Classify Bulgarian sentences against an annotated lexicon.

Builds a tiny in-memory lexicon, then walks through multi-label
classification, match evidence, and the single-label collapse.
"""

from toxlex import build_ontology, classify, collapse, load_lexicon

LEXICON = """\
печка\ttoxic,nontoxic
седалище\tnontoxic,medical
badword\ttoxic
medword\ttoxic,medical
slurword\ttoxic,minority
"""

SENTENCES = [
    "Купих нова печка за кухнята.",
    "Ти си пълен badword!",
    "седалище на фирмата",
    "Здравей, как си днес?",
]


def main():
    onto = build_ontology(load_lexicon(LEXICON))
    print(f"ontology holds {len(onto)} individuals\n")

    for sentence in SENTENCES:
        result = classify(sentence, onto)
        labels = ", ".join(sorted(c.token for c in result.labels))
        forms = ", ".join(m.form for m in result.matches) or "(no lexicon hits)"
        print(sentence)
        print(f"  labels:    {labels}")
        print(f"  matched:   {forms}")
        print(f"  collapsed: {collapse(result).token}")
        print()

    # Every match carries token offsets, so a UI can highlight exactly
    # which words fired.
    result = classify("Ти си пълен badword!", onto)
    span = result.matches[0]
    print(f"evidence span: form={span.form!r} tokens[{span.token_start}:{span.token_end}]")


if __name__ == "__main__":
    main()
