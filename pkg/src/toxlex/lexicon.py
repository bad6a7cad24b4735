"""Annotated word-list ingestion and ontology construction.

The canonical lexicon format is UTF-8 TSV, one entry per line:

    surface_form<TAB>category[,category...]

Category tokens are the lowercase wire names ``toxic``, ``medical``,
``nontoxic``, ``minority``.  Lines starting with ``#`` are annotator
comments; blank lines are ignored; LF and CRLF are both accepted.
Externally published word lists must be converted to this format first.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import IO, Iterable

from .ontology import BaseClass, DerivedClass, Ontology
from .textproc import normalize_phrase

logger = logging.getLogger(__name__)


class LexiconParseError(ValueError):
    """A malformed lexicon line; carries the 1-based line number."""

    def __init__(self, message: str, line_number: int):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


@dataclass(frozen=True)
class LexiconEntry:
    """A normalized surface form with its base category memberships."""

    form: str
    categories: frozenset[BaseClass]
    source_line: int = 0


def load_lexicon(source: str | IO[str] | Iterable[str]) -> list[LexiconEntry]:
    """Parse lexicon TSV into entries, merging duplicate forms.

    Accepts a string, an open text stream, or any iterable of lines.
    Surface forms are normalized; duplicates (after normalization) are
    merged by category-set union with a warning.  Malformed lines raise
    :class:`LexiconParseError` with the offending line number.
    """
    lines = source.splitlines() if isinstance(source, str) else source
    by_form: dict[str, LexiconEntry] = {}
    for lineno, raw in enumerate(lines, start=1):
        line = raw.rstrip("\r\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 2:
            raise LexiconParseError(
                f"expected 2 tab-separated fields, got {len(fields)}", lineno
            )
        raw_form, raw_categories = fields
        form = normalize_phrase(raw_form)
        if not form:
            raise LexiconParseError(
                f"surface form {raw_form!r} is empty after normalization", lineno
            )
        tokens = [t.strip() for t in raw_categories.split(",")]
        tokens = [t for t in tokens if t]
        if not tokens:
            raise LexiconParseError("no categories listed", lineno)
        try:
            categories = frozenset(BaseClass.from_token(t) for t in tokens)
        except ValueError as exc:
            raise LexiconParseError(str(exc), lineno) from None
        if form in by_form:
            previous = by_form[form]
            logger.warning(
                "duplicate lexicon form %r on line %d (first seen line %d); merging categories",
                form, lineno, previous.source_line,
            )
            categories = previous.categories | categories
            by_form[form] = LexiconEntry(form, categories, previous.source_line)
        else:
            by_form[form] = LexiconEntry(form, categories, lineno)
    return list(by_form.values())


def save_lexicon(entries: Iterable[LexiconEntry], stream: IO[str]) -> None:
    """Write entries back out as lexicon TSV (canonical category order)."""
    for entry in entries:
        tokens = ",".join(c.token for c in BaseClass if c in entry.categories)
        stream.write(f"{entry.form}\t{tokens}\n")


def build_ontology(entries: Iterable[LexiconEntry], derived: Iterable[DerivedClass] = ()) -> Ontology:
    """Populate an :class:`Ontology` from loaded lexicon entries."""
    return Ontology(
        [(e.form, e.categories) for e in entries],
        derived=derived,
    )


def entries_missing_toxic(entries: Iterable[LexiconEntry]) -> list[LexiconEntry]:
    """Entries without a toxic membership.

    The published annotated word lists mark every entry as potentially
    toxic; a non-empty result flags data that breaks that expectation.
    Purely a reporting aid: such entries are valid and load normally.
    """
    return [e for e in entries if BaseClass.TOXIC not in e.categories]
