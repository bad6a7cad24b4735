"""Text normalization, tokenization and dictionary phrase matching.

Matching against the lexicon is exact: no stemming or lemmatization is
applied, so inflected Bulgarian forms that are not themselves lexicon
entries will not match.  This is deliberate and keeps classification
results reproducible.

Also provides a deterministic script-based language guess used for
corpus-level language distribution reports.
"""

from __future__ import annotations

import re
import unicodedata
from functools import lru_cache
from typing import TYPE_CHECKING, NamedTuple

if TYPE_CHECKING:
    from .ontology import Ontology

_TOKEN_RE = re.compile(r"\S+")

# Letters that exist in the Russian alphabet but not the Bulgarian one.
_RUSSIAN_ONLY_LETTERS = frozenset("ыэё")


class Token(NamedTuple):
    """A normalized token with its character extent in the source text.

    ``text`` is already normalized; ``char_start``/``char_end`` index the
    raw (pre-normalization) token in Unicode scalar positions.
    """

    text: str
    char_start: int
    char_end: int


class MatchSpan(NamedTuple):
    """A lexicon hit over a token range (``token_end`` exclusive)."""

    token_start: int
    token_end: int
    form: str


@lru_cache(maxsize=65536)
def normalize(word: str) -> str:
    """Lowercase ``word`` and drop every character that is not a letter
    (any script) or a decimal digit.

    May return the empty string when nothing survives (pure punctuation,
    emoji, and so on).  Idempotent.
    """
    return "".join(ch for ch in word.lower() if ch.isalpha() or ch.isdecimal())


def normalize_phrase(text: str) -> str:
    """Canonical key for a single- or multi-word surface form.

    Each whitespace-separated token is normalized; empty normalizations
    are dropped; survivors are joined with single spaces.  This is the
    form under which lexicon entries are stored and matched.
    """
    return " ".join(t.text for t in tokenize(text))


def tokenize(sentence: str) -> list[Token]:
    """Split on Unicode whitespace and normalize each token.

    Tokens whose normalization is empty are dropped.  Offsets always
    reference the raw whitespace-delimited extent, so punctuation stripped
    by normalization is still covered by the span.
    """
    tokens = []
    append = tokens.append
    for m in _TOKEN_RE.finditer(sentence):
        norm = normalize(m[0])
        if norm:
            start, end = m.span()
            append(Token(norm, start, end))
    return tokens


def match_phrases(tokens: list[Token], onto: "Ontology") -> list[MatchSpan]:
    """Find ontology individuals in a token sequence.

    Left-to-right greedy scan: at each position the longest contiguous
    normalized token run equal to an ontology individual wins, bounded by
    the longest phrase present in the ontology.  Matches never overlap;
    the scan resumes immediately after each match.
    """
    forms = onto.individuals
    max_len = onto.max_phrase_len
    if max_len == 0:
        return []
    # Multi-token candidates are only assembled where a phrase can
    # actually start; everywhere else a position costs one dict lookup.
    phrase_starts = onto.phrase_start_tokens
    spans: list[MatchSpan] = []
    append = spans.append
    n = len(tokens)
    i = 0
    while i < n:
        text = tokens[i].text
        if text in phrase_starts:
            matched = False
            for length in range(min(max_len, n - i), 1, -1):
                candidate = " ".join(t.text for t in tokens[i : i + length])
                if candidate in forms:
                    append(MatchSpan(i, i + length, candidate))
                    i += length
                    matched = True
                    break
            if matched:
                continue
        if text in forms:
            append(MatchSpan(i, i + 1, text))
        i += 1
    return spans


@lru_cache(maxsize=8192)
def _letter_script(ch: str) -> str:
    try:
        name = unicodedata.name(ch)
    except ValueError:
        return "other"
    if name.startswith("LATIN"):
        return "latin"
    if name.startswith("CYRILLIC"):
        return "cyrillic"
    return "other"


def identify_language(text: str) -> str:
    """Guess the language of ``text`` from letter scripts alone.

    Returns one of ``bg``, ``ru``, ``en``, ``other``, ``unknown``:
    majority-Latin (> 50% of letters) maps to ``en``; majority-Cyrillic
    maps to ``ru`` when a Russian-only letter appears and ``bg``
    otherwise; texts with no letters are ``unknown``; anything else
    (including ties) is ``other``.
    """
    latin = cyrillic = total = 0
    for ch in text:
        if not ch.isalpha():
            continue
        total += 1
        script = _letter_script(ch)
        if script == "latin":
            latin += 1
        elif script == "cyrillic":
            cyrillic += 1
    if total == 0:
        return "unknown"
    if latin * 2 > total:
        return "en"
    if cyrillic * 2 > total:
        if any(ch in _RUSSIAN_ONLY_LETTERS for ch in text.lower()):
            return "ru"
        return "bg"
    return "other"
