"""Lexicon statistics: class counts, co-occurrence, derived classes.

The co-occurrence matrix shows how often categories share words; its
diagonal is the plain per-class count.  Derived classes materialize the
word sets behind each context filter.
"""

import json

from toxlex import CLASS_ORDER, build_ontology, load_lexicon

LEXICON = """\
печка\ttoxic,nontoxic
седалище\tnontoxic,medical
badword\ttoxic
medword\ttoxic,medical
slurword\ttoxic,minority
"""


def main():
    onto = build_ontology(load_lexicon(LEXICON))

    print(f"{len(onto)} individuals\n")
    counts = onto.class_counts()
    for cls in CLASS_ORDER:
        c = counts[cls]
        print(f"  {cls.display:<20} {c.count:>3d}  ({c.percent:.1f}%)")

    print("\nco-occurrence matrix:")
    header = " ".join(f"{cls.display[:8]:>9}" for cls in CLASS_ORDER)
    print(" " * 10 + header)
    for cls, row in zip(CLASS_ORDER, onto.cooccurrence_matrix().tolist()):
        cells = " ".join(f"{n:>9d}" for n in row)
        print(f"{cls.display[:8]:>9} {cells}")

    print("\nderived class members:")
    for name in ("Ambiguous", "ForumContentBlocked", "FamilyFriendlyContentBlocked"):
        members = ", ".join(sorted(onto.derived_members(name))) or "(none)"
        print(f"  {name}: {members}")

    print("\nJSON export (first individual):")
    exported = onto.to_json_dict()
    print(json.dumps(exported["individuals"][0], ensure_ascii=False, indent=2))


if __name__ == "__main__":
    main()
