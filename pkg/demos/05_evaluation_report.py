"""Evaluation reports: precision, recall, F1, confusion matrix.

Compares gold labels with classifier output and prints the standard
report table, then the same report as JSON for downstream tooling.
"""

import json

from toxlex import BaseClass, classification_report

T = BaseClass.TOXIC
M = BaseClass.MEDICAL
N = BaseClass.NONTOXIC
G = BaseClass.MINORITY

# Gold labels vs what a (deliberately imperfect) classifier predicted.
GOLD = [T, T, T, T, M, M, N, N, N, N, N, G, G, T, M]
PRED = [T, T, T, N, M, T, N, N, N, T, N, G, N, T, M]


def main():
    report = classification_report(GOLD, PRED)
    print(report.render_text())

    print("\nconfusion matrix (rows = gold, columns = predicted):")
    print(report.confusion)

    print("\nmacro averaged over:", ", ".join(c.display for c in report.macro_over))

    print("\nJSON form:")
    print(json.dumps(report.to_dict(), indent=2)[:400], "...")


if __name__ == "__main__":
    main()
