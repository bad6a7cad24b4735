"""Lexicon-based toxic language classification for Bulgarian text.

Builds an ontology of annotated surface forms from a category-tagged
word list, classifies sentences by exact phrase matching, evaluates
boolean category expressions for context filters (forum,
family-friendly, user-defined), and produces classification reports.
"""

from .classifier import DEFAULT_PRIORITY, Classification, classify, classify_batch, collapse
from .corpus import (
    AnnotatedSentence,
    CorpusParseError,
    CorpusStats,
    auto_annotate,
    corpus_stats,
    load_corpus,
    save_corpus,
    stratified_split,
)
from .evaluation import (
    Averages,
    ClassMetrics,
    EvalReport,
    LabelShare,
    classification_report,
    confusion_matrix,
    label_distribution,
)
from .lexicon import (
    LexiconEntry,
    LexiconParseError,
    build_ontology,
    entries_missing_toxic,
    load_lexicon,
    save_lexicon,
)
from .ontology import (
    AMBIGUOUS,
    BUILTIN_DERIVED,
    CLASS_ORDER,
    FAMILY_FRIENDLY_BLOCKED,
    FORUM_BLOCKED,
    And,
    Base,
    BaseClass,
    ClassCount,
    ClassExpr,
    DerivedClass,
    Not,
    Ontology,
    Or,
    UnknownDerivedClassError,
    eval_expr,
)
from .policy import (
    BUILTIN_POLICIES,
    FAMILY_FRIENDLY,
    FORUM,
    ContextPolicy,
    FilterDecision,
    PolicyParseError,
    filter_text,
    load_policies,
    parse_policy_expr,
)
from .textproc import MatchSpan, Token, identify_language, match_phrases, normalize, normalize_phrase, tokenize

__version__ = "0.1.0"
