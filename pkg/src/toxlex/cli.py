"""Command-line interface.

Subcommands: ``classify``, ``filter``, ``evaluate``, ``lexicon``
(stats/export) and ``corpus`` (stats/split/annotate).  Exit codes: 0 on
success, 2 for usage or parse errors, 3 for I/O errors.  JSON output
mode always emits one JSON value per line so results can be piped.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .classifier import DEFAULT_PRIORITY, classify_batch, parse_priority
from .corpus import CorpusParseError, auto_annotate, corpus_stats, load_corpus, save_corpus, stratified_split
from .evaluation import classification_report
from .lexicon import LexiconParseError, build_ontology, load_lexicon
from .ontology import CLASS_ORDER, Ontology
from .policy import BUILTIN_POLICIES, ContextPolicy, PolicyParseError, filter_text, load_policies, parse_policy_expr

USAGE_ERROR = 2
IO_ERROR = 3


class _UsageError(Exception):
    pass


def _load_ontology(path: str) -> Ontology:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise _UsageError(f"cannot read lexicon {path}: {exc}") from None
    return build_ontology(load_lexicon(text))


def _read_corpus(path: str):
    return load_corpus(Path(path).read_text(encoding="utf-8"))


def _input_sentences(args) -> list[str]:
    if getattr(args, "text", None) is not None:
        return [args.text]
    if getattr(args, "input", None) is not None:
        return [s.text for s in _read_corpus(args.input)]
    return [line.rstrip("\n") for line in sys.stdin if line.strip()]


def _cmd_classify(args) -> int:
    onto = _load_ontology(args.lexicon)
    priority = parse_priority(args.priority) if args.priority else DEFAULT_PRIORITY
    sentences = _input_sentences(args)
    results = classify_batch(sentences, onto, single_label=args.single_label, priority=priority)
    if args.format == "json":
        for text, c in zip(sentences, results):
            print(json.dumps(c.to_dict(text), ensure_ascii=False))
    else:
        print("text", "labels", "matched_forms", sep="\t")
        for text, c in zip(sentences, results):
            if args.single_label:
                labels = c.collapsed.token
            else:
                labels = ",".join(cls.token for cls in CLASS_ORDER if cls in c.labels)
            forms = ",".join(m.form for m in c.matches)
            print(text, labels, forms, sep="\t")
    return 0


def _resolve_policy(args) -> ContextPolicy:
    if args.policy_expr is not None:
        return ContextPolicy("ad-hoc", parse_policy_expr(args.policy_expr))
    policies = dict(BUILTIN_POLICIES)
    if args.policy_file is not None:
        try:
            text = Path(args.policy_file).read_text(encoding="utf-8")
        except OSError as exc:
            raise _UsageError(f"cannot read policy file {args.policy_file}: {exc}") from None
        try:
            policies = load_policies(text)
        except ValueError as exc:
            raise _UsageError(str(exc)) from None
    if args.context is None:
        raise _UsageError("one of --context or --policy-expr is required")
    try:
        return policies[args.context]
    except KeyError:
        known = ", ".join(sorted(policies))
        raise _UsageError(f"unknown context {args.context!r} (known: {known})") from None


def _cmd_filter(args) -> int:
    onto = _load_ontology(args.lexicon)
    policy = _resolve_policy(args)
    sentences = _input_sentences(args)
    if args.format == "json":
        for text in sentences:
            decision = filter_text(text, policy, onto)
            print(json.dumps(decision.to_dict(text), ensure_ascii=False))
    else:
        print("text", "blocked", "triggering_forms", sep="\t")
        for text in sentences:
            decision = filter_text(text, policy, onto)
            print(text, str(decision.blocked).lower(), ",".join(decision.triggering_forms), sep="\t")
    return 0


def _cmd_evaluate(args) -> int:
    gold_corpus = _read_corpus(args.gold)
    if any(s.label is None for s in gold_corpus):
        raise _UsageError("gold corpus contains unlabeled sentences")
    gold = [s.label for s in gold_corpus]

    if (args.pred is None) == (args.lexicon is None):
        raise _UsageError("exactly one of --pred or --lexicon is required")
    if args.pred is not None:
        pred_corpus = _read_corpus(args.pred)
        if len(pred_corpus) != len(gold_corpus):
            raise _UsageError(
                f"gold has {len(gold_corpus)} sentences but predictions have {len(pred_corpus)}"
            )
        mismatched = [
            i for i, (g, p) in enumerate(zip(gold_corpus, pred_corpus), start=1)
            if g.text != p.text
        ]
        if mismatched:
            raise _UsageError(f"prediction text differs from gold on line {mismatched[0]}")
        if any(s.label is None for s in pred_corpus):
            raise _UsageError("prediction corpus contains unlabeled sentences")
        pred = [s.label for s in pred_corpus]
    else:
        onto = _load_ontology(args.lexicon)
        priority = parse_priority(args.priority) if args.priority else DEFAULT_PRIORITY
        results = classify_batch((s.text for s in gold_corpus), onto, single_label=True, priority=priority)
        pred = [c.collapsed for c in results]

    try:
        report = classification_report(gold, pred, macro_all_classes=args.macro_all_classes)
    except ValueError as exc:
        raise _UsageError(str(exc)) from None
    if args.format == "json":
        print(json.dumps(report.to_dict(), ensure_ascii=False))
    else:
        print(report.render_text())
    return 0


def _cmd_lexicon_stats(args) -> int:
    onto = _load_ontology(args.path)
    counts = onto.class_counts()
    matrix = onto.cooccurrence_matrix()
    if args.format == "json":
        print(json.dumps({
            "total": len(onto),
            "counts": {c.token: {"count": counts[c].count, "percent": counts[c].percent} for c in CLASS_ORDER},
            "cooccurrence": {
                "classes": [c.display for c in CLASS_ORDER],
                "matrix": matrix.tolist(),
            },
        }, ensure_ascii=False))
        return 0
    width = max(len(c.display) for c in CLASS_ORDER) + 2
    print(f"individuals: {len(onto)}")
    for c in CLASS_ORDER:
        print(f"{c.display:<{width}}{counts[c].count:>6d}  ({counts[c].percent:.1f}%)")
    print()
    print("co-occurrence (rows and columns in the order above):")
    for row in matrix.tolist():
        print("  " + "  ".join(f"{n:>5d}" for n in row))
    return 0


def _cmd_lexicon_export(args) -> int:
    onto = _load_ontology(args.path)
    print(json.dumps(onto.to_json_dict(), ensure_ascii=False))
    return 0


def _cmd_corpus_stats(args) -> int:
    stats = corpus_stats(_read_corpus(args.input))
    print(json.dumps(stats.to_dict(), ensure_ascii=False))
    return 0


def _cmd_corpus_split(args) -> int:
    sentences = _read_corpus(args.input)
    try:
        train, test = stratified_split(sentences, args.fraction, args.seed)
    except ValueError as exc:
        raise _UsageError(str(exc)) from None
    with open(args.train_output, "w", encoding="utf-8") as fh:
        save_corpus(train, fh)
    with open(args.test_output, "w", encoding="utf-8") as fh:
        save_corpus(test, fh)
    print(json.dumps({"train": len(train), "test": len(test)}))
    return 0


def _cmd_corpus_annotate(args) -> int:
    sentences = _read_corpus(args.input)
    onto = _load_ontology(args.lexicon)
    priority = parse_priority(args.priority) if args.priority else DEFAULT_PRIORITY
    annotated, summary = auto_annotate(sentences, onto, priority=priority)
    if args.output is not None:
        with open(args.output, "w", encoding="utf-8") as fh:
            save_corpus(annotated, fh)
    else:
        save_corpus(annotated, sys.stdout)
    print(json.dumps(summary), file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="toxlex",
        description="Lexicon-based toxic language classification and filtering for Bulgarian text.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_io_flags(p, with_lexicon=True):
        if with_lexicon:
            p.add_argument("--lexicon", required=True, help="annotated lexicon TSV")
        p.add_argument("--text", help="classify a single sentence")
        p.add_argument("--input", help="corpus JSONL to read sentences from")
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("classify", help="detect categories per sentence")
    add_io_flags(p)
    p.add_argument("--single-label", action="store_true", help="collapse to one label per sentence")
    p.add_argument("--priority", help="collapse priority, e.g. toxic,medical,minority,nontoxic")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("filter", help="apply a context policy per sentence")
    add_io_flags(p)
    p.add_argument("--context", help="policy name: forum, family-friendly, or one from --policy-file")
    p.add_argument("--policy-expr", help="inline blocked-set expression")
    p.add_argument("--policy-file", help="JSON array of {name, expr} policies")
    p.set_defaults(func=_cmd_filter)

    p = sub.add_parser("evaluate", help="score predictions against a gold corpus")
    p.add_argument("--gold", required=True, help="labeled corpus JSONL")
    p.add_argument("--pred", help="predictions as labeled corpus JSONL")
    p.add_argument("--lexicon", help="classify the gold texts instead of reading --pred")
    p.add_argument("--priority", help="collapse priority when classifying via --lexicon")
    p.add_argument("--macro-all-classes", action="store_true",
                   help="macro-average over all four classes, not only observed ones")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_evaluate)

    p = sub.add_parser("lexicon", help="lexicon statistics and export")
    lex_sub = p.add_subparsers(dest="lexicon_command", required=True)
    ps = lex_sub.add_parser("stats", help="class counts and co-occurrence matrix")
    ps.add_argument("path", help="annotated lexicon TSV")
    ps.add_argument("--format", choices=("text", "json"), default="text")
    ps.set_defaults(func=_cmd_lexicon_stats)
    pe = lex_sub.add_parser("export", help="export the ontology as JSON")
    pe.add_argument("path", help="annotated lexicon TSV")
    pe.set_defaults(func=_cmd_lexicon_export)

    p = sub.add_parser("corpus", help="corpus statistics, splitting, auto-annotation")
    corpus_sub = p.add_subparsers(dest="corpus_command", required=True)
    ps = corpus_sub.add_parser("stats", help="label and language distribution")
    ps.add_argument("--input", required=True, help="corpus JSONL")
    ps.set_defaults(func=_cmd_corpus_stats)
    ps = corpus_sub.add_parser("split", help="stratified train/test split")
    ps.add_argument("--input", required=True, help="labeled corpus JSONL")
    ps.add_argument("--fraction", type=float, required=True, help="test fraction in (0,1)")
    ps.add_argument("--seed", type=int, required=True)
    ps.add_argument("--train-output", required=True)
    ps.add_argument("--test-output", required=True)
    ps.set_defaults(func=_cmd_corpus_split)
    ps = corpus_sub.add_parser("annotate", help="label a corpus with the classifier")
    ps.add_argument("--input", required=True, help="corpus JSONL")
    ps.add_argument("--lexicon", required=True, help="annotated lexicon TSV")
    ps.add_argument("--output", help="write annotated JSONL here instead of stdout")
    ps.add_argument("--priority", help="collapse priority override")
    ps.set_defaults(func=_cmd_corpus_annotate)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (_UsageError, LexiconParseError, PolicyParseError, CorpusParseError, ValueError) as exc:
        print(f"toxlex: error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except OSError as exc:
        print(f"toxlex: i/o error: {exc}", file=sys.stderr)
        return IO_ERROR


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
