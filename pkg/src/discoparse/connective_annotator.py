"""Connective candidate matching and discourse-usage classification.

Candidates are lexicon matches found per sentence (greedy, longest first,
token aligned, case insensitive). Each candidate is then described by six
local syntactic and lexical features and classified as discourse usage or
not by a trained decision tree.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

from .decision_tree import predict
from .parse_tree import NULL_LABEL, exact_cover_chain

USAGE_POSITIVE = "discourse"
USAGE_NEGATIVE = "non-discourse"

CASE_LOWER = "all lowercase"
CASE_UPPER = "all uppercase"
CASE_INITIAL_UPPER = "initial uppercase"
CASE_MIXED = "mixed"


@dataclass(frozen=True)
class ConnectiveCandidate:
    doc_id: str
    sent_index: int
    token_begin: int  # index_in_sentence, half-open
    token_end: int
    surface: str  # lowercased space-joined tokens; always a lexicon key

    @property
    def token_range(self):
        return range(self.token_begin, self.token_end)


@dataclass(frozen=True)
class ConnectiveFeatureVector:
    conn_lowercase: str
    case_category: str
    self_cat: str
    self_cat_parent: str
    self_cat_left_sibling: str
    self_cat_right_sibling: str

    def as_features(self):
        return asdict(self)


def find_candidates(document, lexicon):
    """Lexicon matches in the document, greedy longest-first per sentence.

    Matching never crosses a sentence boundary and never reuses a token,
    so results are non-overlapping and sorted by (sentence, token start).
    """
    candidates = []
    max_length = lexicon.max_token_length
    for sentence in document.sentences:
        lowered = [token.surface.lower() for token in sentence.tokens]
        i = 0
        while i < len(lowered):
            match = None
            for length in range(min(max_length, len(lowered) - i), 0, -1):
                key = " ".join(lowered[i:i + length])
                if key in lexicon.entries:
                    match = (key, i + length)
                    break
            if match is None:
                i += 1
                continue
            key, end = match
            candidates.append(ConnectiveCandidate(
                document.doc_id, sentence.sent_index, i, end, key))
            i = end
    return candidates


def case_category(surface):
    """Case shape of the raw surface; total over arbitrary strings."""
    if surface == surface.lower():
        return CASE_LOWER
    if surface == surface.upper():
        return CASE_UPPER
    if surface[0].isupper() and surface[1:] == surface[1:].lower():
        return CASE_INITIAL_UPPER
    return CASE_MIXED


def _label_or_null(node):
    return node.label if node is not None else NULL_LABEL


def extract_connective_features(candidate, sentence):
    """Six connective features for one candidate.

    The exact-cover nodes over a connective form a unary chain; the
    category label and its parent are read off the bottom of that chain
    (the node hugging the connective) while the siblings are read off the
    top, which is what places single-token connectives next to the clause
    they attach to.
    """
    chain = exact_cover_chain(sentence.tree,
                              (candidate.token_begin, candidate.token_end))
    bottom, top = chain[0], chain[-1]
    raw = " ".join(token.surface for token in
                   sentence.tokens[candidate.token_begin:candidate.token_end])
    return ConnectiveFeatureVector(
        conn_lowercase=candidate.surface,
        case_category=case_category(raw),
        self_cat=bottom.label,
        self_cat_parent=_label_or_null(bottom.parent),
        self_cat_left_sibling=_label_or_null(top.left_sibling),
        self_cat_right_sibling=_label_or_null(top.right_sibling),
    )


def classify_usage(features, model):
    """True when the usage tree labels the feature vector as discourse."""
    return predict(model, features.as_features()) == USAGE_POSITIVE
