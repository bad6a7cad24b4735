"""Context filters over matched lexicon forms.

A policy names a blocked set: a boolean expression over the four base
classes.  A sentence is blocked when any matched form's memberships
satisfy that expression.  Two policies ship built in:

* ``forum`` blocks strictly toxic forms only.  Note that a toxic form
  which is also a minority-group term is *not* blocked here; that is the
  intended reading of the blocked-set definition, so forum operators who
  want slurs blocked should use a custom policy.
* ``family-friendly`` blocks every form except those that also carry a
  non-toxic meaning.

User policies are written in a small expression language:

    expr   := term ('OR' term)*
    term   := factor ('AND' factor)*
    factor := 'NOT' factor | '(' expr ')' | class-name

Class names are the four base-class identifiers (``Toxic``,
``MedicalTerminology``, ``NonToxic``, ``MinorityGroup``), matched
case-insensitively, as are the keywords.  NOT binds tighter than AND,
which binds tighter than OR.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import IO, Iterable

from .ontology import (
    FAMILY_FRIENDLY_BLOCKED,
    FORUM_BLOCKED,
    And,
    Base,
    BaseClass,
    ClassExpr,
    Not,
    Ontology,
    Or,
)
from .textproc import match_phrases, tokenize


class PolicyParseError(ValueError):
    """A bad policy expression; ``position`` is a 1-based column."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (column {position})")
        self.position = position


@dataclass(frozen=True)
class ContextPolicy:
    """A named filter defined by its blocked-set expression."""

    name: str
    blocked_expr: ClassExpr


@dataclass(frozen=True)
class FilterDecision:
    """Outcome of filtering one sentence under one policy.

    ``blocked`` is true exactly when ``triggering_forms`` is non-empty.
    """

    blocked: bool
    triggering_forms: tuple[str, ...]

    def __post_init__(self):
        if self.blocked != bool(self.triggering_forms):
            raise ValueError("blocked must mirror the presence of triggering forms")

    def to_dict(self, text: str | None = None) -> dict:
        record = {"blocked": self.blocked, "triggering_forms": list(self.triggering_forms)}
        if text is not None:
            record = {"text": text, **record}
        return record


FORUM = ContextPolicy("forum", FORUM_BLOCKED.definition)
FAMILY_FRIENDLY = ContextPolicy("family-friendly", FAMILY_FRIENDLY_BLOCKED.definition)

BUILTIN_POLICIES: dict[str, ContextPolicy] = {
    FORUM.name: FORUM,
    FAMILY_FRIENDLY.name: FAMILY_FRIENDLY,
}

_CLASS_NAMES = {c.display.lower(): c for c in BaseClass}

_TOKEN_RE = re.compile(r"\s*(?:(?P<word>[A-Za-z][A-Za-z0-9_]*)|(?P<lparen>\()|(?P<rparen>\)))")


def _lex(source: str) -> list[tuple[str, str, int]]:
    """Tokenize into (kind, text, 1-based column) triples plus a trailing
    end marker."""
    tokens = []
    pos = 0
    while pos < len(source):
        m = _TOKEN_RE.match(source, pos)
        if m is None:
            stripped = source[pos:].lstrip()
            if not stripped:
                break
            column = len(source) - len(stripped) + 1
            raise PolicyParseError(f"unexpected character {stripped[0]!r}", column)
        if m.lastgroup == "word":
            tokens.append(("word", m.group("word"), m.start("word") + 1))
        elif m.lastgroup == "lparen":
            tokens.append(("(", "(", m.start("lparen") + 1))
        else:
            tokens.append((")", ")", m.start("rparen") + 1))
        pos = m.end()
    tokens.append(("end", "", len(source) + 1))
    return tokens


class _Parser:
    def __init__(self, source: str):
        self.tokens = _lex(source)
        self.index = 0
        self.open_parens: list[int] = []

    @property
    def current(self) -> tuple[str, str, int]:
        return self.tokens[self.index]

    def advance(self) -> None:
        self.index += 1

    def at_keyword(self, keyword: str) -> bool:
        kind, text, _ = self.current
        return kind == "word" and text.lower() == keyword

    def parse(self) -> ClassExpr:
        expr = self.expr()
        kind, text, pos = self.current
        if kind != "end":
            raise PolicyParseError(f"unexpected {text!r} after expression", pos)
        return expr

    def expr(self) -> ClassExpr:
        terms = [self.term()]
        while self.at_keyword("or"):
            self.advance()
            terms.append(self.term())
        return terms[0] if len(terms) == 1 else Or(*terms)

    def term(self) -> ClassExpr:
        factors = [self.factor()]
        while self.at_keyword("and"):
            self.advance()
            factors.append(self.factor())
        return factors[0] if len(factors) == 1 else And(*factors)

    def factor(self) -> ClassExpr:
        kind, text, pos = self.current
        if kind == "word" and text.lower() == "not":
            self.advance()
            return Not(self.factor())
        if kind == "(":
            self.advance()
            self.open_parens.append(pos)
            inner = self.expr()
            close_kind, close_text, close_pos = self.current
            if close_kind == "end":
                raise PolicyParseError("unclosed '('", self.open_parens[-1])
            if close_kind != ")":
                raise PolicyParseError(f"expected ')' before {close_text!r}", close_pos)
            self.advance()
            self.open_parens.pop()
            return inner
        if kind == "word":
            cls = _CLASS_NAMES.get(text.lower())
            if cls is None:
                raise PolicyParseError(f"unknown class name {text!r}", pos)
            self.advance()
            return Base(cls)
        if kind == "end" and self.open_parens:
            raise PolicyParseError("unclosed '('", self.open_parens[-1])
        if kind == "end":
            raise PolicyParseError("unexpected end of expression", pos)
        raise PolicyParseError(f"unexpected {text!r}", pos)


def parse_policy_expr(source: str) -> ClassExpr:
    """Parse a policy expression; raises :class:`PolicyParseError` with
    the offending column on bad syntax or unknown class names."""
    return _Parser(source).parse()


def filter_text(sentence: str, policy: ContextPolicy, onto: Ontology) -> FilterDecision:
    """Apply a policy to one sentence.

    Every matched form whose memberships satisfy the policy's blocked
    expression triggers; one trigger is enough to block.  Triggering
    forms are reported uniquely, in match order.
    """
    triggers: list[str] = []
    seen: set[str] = set()
    for span in match_phrases(tokenize(sentence), onto):
        if span.form in seen:
            continue
        if policy.blocked_expr.evaluate(onto.memberships(span.form)):
            triggers.append(span.form)
            seen.add(span.form)
    return FilterDecision(bool(triggers), tuple(triggers))


def load_policies(source: str | IO[str]) -> dict[str, ContextPolicy]:
    """Load user policies from a JSON array of {"name", "expr"} objects.

    Returns built-ins plus the user policies; a user policy may not reuse
    a built-in name or repeat another user name.
    """
    text = source if isinstance(source, str) else source.read()
    try:
        records = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"policy file is not valid JSON: {exc}") from None
    if not isinstance(records, list):
        raise ValueError("policy file must contain a JSON array")
    policies = dict(BUILTIN_POLICIES)
    for i, record in enumerate(records):
        if not isinstance(record, dict) or "name" not in record or "expr" not in record:
            raise ValueError(f"policy entry {i} must be an object with 'name' and 'expr'")
        name = record["name"]
        if not isinstance(name, str) or not name:
            raise ValueError(f"policy entry {i} has an invalid name")
        if name in BUILTIN_POLICIES:
            raise ValueError(f"policy {name!r} would shadow a built-in policy")
        if name in policies:
            raise ValueError(f"duplicate policy name {name!r}")
        policies[name] = ContextPolicy(name, parse_policy_expr(record["expr"]))
    return policies
