"""Category universe over annotated lexicon individuals.

Four base classes cover every lexicon entry.  Composite categories
(ambiguous words, the per-context blocked word sets) are boolean
expressions over those four and are evaluated against an individual's
membership set rather than stored.  The algebra is propositional over
four atoms, so everything here is exhaustively checkable against a
16-row truth table.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from types import MappingProxyType
from typing import Iterable, Mapping

import numpy as np

from .textproc import normalize_phrase


class BaseClass(enum.Enum):
    """The four base categories a lexicon individual can belong to.

    Member order matches the canonical report order used by every table
    and matrix in the package.  ``display`` is the serialized class name
    in ontology JSON exports; ``token`` is the lowercase wire token used
    in lexicon TSV and corpus JSONL files.
    """

    TOXIC = ("Toxic", "toxic")
    MEDICAL = ("MedicalTerminology", "medical")
    NONTOXIC = ("NonToxic", "nontoxic")
    MINORITY = ("MinorityGroup", "minority")

    def __init__(self, display: str, token: str):
        self.display = display
        self.token = token

    @classmethod
    def from_token(cls, token: str) -> "BaseClass":
        try:
            return _BY_TOKEN[token]
        except KeyError:
            valid = ", ".join(sorted(_BY_TOKEN))
            raise ValueError(f"unknown category token {token!r} (expected one of: {valid})") from None

    @classmethod
    def from_display(cls, name: str) -> "BaseClass":
        try:
            return _BY_DISPLAY[name]
        except KeyError:
            valid = ", ".join(c.display for c in cls)
            raise ValueError(f"unknown class name {name!r} (expected one of: {valid})") from None

    def __repr__(self) -> str:
        return f"BaseClass.{self.name}"


_BY_TOKEN = {c.token: c for c in BaseClass}
_BY_DISPLAY = {c.display: c for c in BaseClass}

#: Canonical class order for tables, matrices and serialized label lists.
CLASS_ORDER: tuple[BaseClass, ...] = tuple(BaseClass)


class ClassExpr:
    """A boolean expression over base-class memberships.

    Evaluation is total and deterministic: given any set of base classes,
    every expression is simply true or false.
    """

    precedence = 4

    def evaluate(self, memberships: frozenset[BaseClass] | set[BaseClass]) -> bool:
        raise NotImplementedError

    def to_source(self) -> str:
        """Render in the policy expression grammar (AND/OR/NOT, parens)."""
        raise NotImplementedError

    def _child_source(self, child: "ClassExpr") -> str:
        text = child.to_source()
        if child.precedence < self.precedence:
            return f"({text})"
        return text

    def __str__(self) -> str:
        return self.to_source()


class Base(ClassExpr):
    """Atom: true iff the class is in the membership set."""

    precedence = 4
    __slots__ = ("cls",)

    def __init__(self, cls: BaseClass):
        self.cls = cls

    def evaluate(self, memberships):
        return self.cls in memberships

    def to_source(self):
        return self.cls.display

    def __eq__(self, other):
        return isinstance(other, Base) and self.cls is other.cls

    def __hash__(self):
        return hash((Base, self.cls))

    def __repr__(self):
        return f"Base({self.cls!r})"


class And(ClassExpr):
    """Conjunction of two or more child expressions."""

    precedence = 2
    __slots__ = ("children",)

    def __init__(self, *children: ClassExpr):
        if len(children) < 2:
            raise ValueError("And requires at least two children")
        self.children = tuple(children)

    def evaluate(self, memberships):
        return all(c.evaluate(memberships) for c in self.children)

    def to_source(self):
        return " AND ".join(self._child_source(c) for c in self.children)

    def __eq__(self, other):
        return isinstance(other, And) and self.children == other.children

    def __hash__(self):
        return hash((And, self.children))

    def __repr__(self):
        return f"And({', '.join(map(repr, self.children))})"


class Or(ClassExpr):
    """Disjunction of two or more child expressions."""

    precedence = 1
    __slots__ = ("children",)

    def __init__(self, *children: ClassExpr):
        if len(children) < 2:
            raise ValueError("Or requires at least two children")
        self.children = tuple(children)

    def evaluate(self, memberships):
        return any(c.evaluate(memberships) for c in self.children)

    def to_source(self):
        return " OR ".join(self._child_source(c) for c in self.children)

    def __eq__(self, other):
        return isinstance(other, Or) and self.children == other.children

    def __hash__(self):
        return hash((Or, self.children))

    def __repr__(self):
        return f"Or({', '.join(map(repr, self.children))})"


class Not(ClassExpr):
    """Negation of a single child expression."""

    precedence = 3
    __slots__ = ("child",)

    def __init__(self, child: ClassExpr):
        self.child = child

    def evaluate(self, memberships):
        return not self.child.evaluate(memberships)

    def to_source(self):
        return f"NOT {self._child_source(self.child)}"

    def __eq__(self, other):
        return isinstance(other, Not) and self.child == other.child

    def __hash__(self):
        return hash((Not, self.child))

    def __repr__(self):
        return f"Not({self.child!r})"


def eval_expr(expr: ClassExpr, memberships: frozenset[BaseClass] | set[BaseClass]) -> bool:
    """Evaluate ``expr`` against a set of base-class memberships."""
    return expr.evaluate(memberships)


@dataclass(frozen=True)
class DerivedClass:
    """A named class defined by an expression over the base classes."""

    name: str
    definition: ClassExpr


AMBIGUOUS = DerivedClass(
    "Ambiguous",
    And(Base(BaseClass.TOXIC), Base(BaseClass.NONTOXIC)),
)

FAMILY_FRIENDLY_BLOCKED = DerivedClass(
    "FamilyFriendlyContentBlocked",
    And(
        Or(Base(BaseClass.TOXIC), Base(BaseClass.MEDICAL), Base(BaseClass.MINORITY)),
        Not(Base(BaseClass.NONTOXIC)),
    ),
)

FORUM_BLOCKED = DerivedClass(
    "ForumContentBlocked",
    And(
        Base(BaseClass.TOXIC),
        Not(Base(BaseClass.NONTOXIC)),
        Not(Base(BaseClass.MEDICAL)),
        Not(Base(BaseClass.MINORITY)),
    ),
)

BUILTIN_DERIVED: tuple[DerivedClass, ...] = (AMBIGUOUS, FAMILY_FRIENDLY_BLOCKED, FORUM_BLOCKED)


class UnknownDerivedClassError(KeyError):
    """Raised when a derived class name is not registered."""


@dataclass(frozen=True)
class ClassCount:
    """Individual count for one class plus its share of all individuals."""

    count: int
    percent: float


class Ontology:
    """Immutable population of surface forms with their memberships.

    Surface forms are normalized on construction (see
    :func:`toxlex.textproc.normalize_phrase`) and must be unique after
    normalization; every individual needs at least one base class.  The
    built-in derived classes are always registered; extra ones may be
    supplied at construction but can never shadow a built-in name.

    Instances never change after ``__init__``, so concurrent reads are
    safe without locking.
    """

    def __init__(
        self,
        individuals: Mapping[str, Iterable[BaseClass]] | Iterable[tuple[str, Iterable[BaseClass]]] = (),
        derived: Iterable[DerivedClass] = (),
    ):
        items = individuals.items() if isinstance(individuals, Mapping) else individuals
        store: dict[str, frozenset[BaseClass]] = {}
        for form, classes in items:
            key = normalize_phrase(form)
            if not key:
                raise ValueError(f"surface form {form!r} is empty after normalization")
            memberships = frozenset(classes)
            if not memberships:
                raise ValueError(f"individual {form!r} has no base class memberships")
            if key in store:
                raise ValueError(f"duplicate individual {key!r} (normalize and merge before construction)")
            store[key] = memberships

        registry: dict[str, DerivedClass] = {d.name: d for d in BUILTIN_DERIVED}
        for extra in derived:
            if extra.name in registry:
                raise ValueError(f"derived class {extra.name!r} is already defined")
            registry[extra.name] = extra

        self._individuals = MappingProxyType(store)
        self._derived = MappingProxyType(registry)
        self._max_phrase_len = max((form.count(" ") + 1 for form in store), default=0)
        self._phrase_start_tokens = frozenset(
            form.split(" ", 1)[0] for form in store if " " in form
        )

    @property
    def individuals(self) -> Mapping[str, frozenset[BaseClass]]:
        return self._individuals

    @property
    def derived(self) -> Mapping[str, DerivedClass]:
        return self._derived

    @property
    def max_phrase_len(self) -> int:
        """Token count of the longest surface form (0 when empty)."""
        return self._max_phrase_len

    @property
    def phrase_start_tokens(self) -> frozenset[str]:
        """First tokens of every multi-word surface form."""
        return self._phrase_start_tokens

    def __len__(self) -> int:
        return len(self._individuals)

    def __contains__(self, form: str) -> bool:
        return form in self._individuals

    def memberships(self, form: str) -> frozenset[BaseClass]:
        """Base classes of an individual, or KeyError when absent."""
        return self._individuals[form]

    def derived_members(self, name: str) -> set[str]:
        """All surface forms satisfying the named derived class.

        Raises :class:`UnknownDerivedClassError` for unregistered names.
        The result is a plain set: insertion order of individuals never
        affects it.
        """
        try:
            expr = self._derived[name].definition
        except KeyError:
            raise UnknownDerivedClassError(name) from None
        return {form for form, classes in self._individuals.items() if expr.evaluate(classes)}

    def cooccurrence_matrix(self) -> np.ndarray:
        """Pairwise shared-individual counts in canonical class order.

        Cell (i, j) counts individuals belonging to both class i and
        class j; the diagonal holds plain per-class counts.  Symmetric by
        construction.
        """
        matrix = np.zeros((len(CLASS_ORDER), len(CLASS_ORDER)), dtype=np.int64)
        index = {c: i for i, c in enumerate(CLASS_ORDER)}
        for classes in self._individuals.values():
            present = [index[c] for c in classes]
            for i in present:
                for j in present:
                    matrix[i, j] += 1
        return matrix

    def class_counts(self) -> dict[BaseClass, ClassCount]:
        """Per-class individual count plus percent of total individuals.

        Percentages are relative to the individual count (not to the sum
        of class memberships), so multi-class individuals push the column
        total above 100.  Empty ontology yields zero percents.
        """
        total = len(self._individuals)
        counts = {c: 0 for c in CLASS_ORDER}
        for classes in self._individuals.values():
            for c in classes:
                counts[c] += 1
        return {
            c: ClassCount(n, 100.0 * n / total if total else 0.0)
            for c, n in counts.items()
        }

    def to_json_dict(self) -> dict:
        """JSON-ready export: individuals with class names, then derived
        class definitions rendered in the policy expression grammar."""
        return {
            "individuals": [
                {"form": form, "classes": [c.display for c in CLASS_ORDER if c in classes]}
                for form, classes in sorted(self._individuals.items())
            ],
            "derived": [
                {"name": d.name, "expr": d.definition.to_source()}
                for d in self._derived.values()
            ],
        }
