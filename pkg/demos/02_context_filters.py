"""Context filters: what gets blocked where.

The same sentence can be fine on a health forum and unacceptable on a
children's site.  Filters are boolean expressions over the four base
categories, evaluated per matched word.
"""

from toxlex import (
    FAMILY_FRIENDLY,
    FORUM,
    ContextPolicy,
    build_ontology,
    filter_text,
    load_lexicon,
    parse_policy_expr,
)

LEXICON = """\
печка\ttoxic,nontoxic
седалище\tnontoxic,medical
badword\ttoxic
medword\ttoxic,medical
slurword\ttoxic,minority
"""

SENTENCES = [
    "Купих нова печка.",          # ambiguous word, never blocked
    "Той спомена medword.",       # toxic-medical: forum ok, family-friendly blocked
    "Ти си badword.",             # strictly toxic: blocked everywhere
    "каза slurword на глас",      # toxic-minority: NOT blocked in forums (see below)
]


def show(policy, onto):
    print(f"policy: {policy.name}")
    print(f"  blocked set: {policy.blocked_expr.to_source()}")
    for sentence in SENTENCES:
        decision = filter_text(sentence, policy, onto)
        verdict = "BLOCK" if decision.blocked else "allow"
        triggers = f"  <- {', '.join(decision.triggering_forms)}" if decision.blocked else ""
        print(f"  {verdict}  {sentence}{triggers}")
    print()


def main():
    onto = build_ontology(load_lexicon(LEXICON))

    show(FORUM, onto)
    show(FAMILY_FRIENDLY, onto)

    # The forum blocked set excludes toxic words that are also
    # minority-group terms, which means slurs pass the built-in forum
    # filter.  Operators who want them gone write a stricter policy:
    strict = ContextPolicy(
        "strict-forum",
        parse_policy_expr("Toxic AND NOT NonToxic AND NOT MedicalTerminology"),
    )
    show(strict, onto)


if __name__ == "__main__":
    main()
