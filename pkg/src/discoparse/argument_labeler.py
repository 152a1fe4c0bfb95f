"""Argument labeling by constituent classification and merging.

Candidate constituents are pruned to the nodes hanging directly off the
connective-to-root path, classified three ways (part of Arg1, part of Arg2,
neither), and the picked nodes are merged into token spans. When nothing is
labeled part of Arg1 the whole previous sentence serves as Arg1; without a
previous sentence the relation is dropped.
"""

from __future__ import annotations

import enum
from dataclasses import asdict, dataclass

from .connective_annotator import extract_connective_features
from .decision_tree import predict
from .errors import PredictionError
from .parse_tree import exact_cover_chain, node_context, path_to_root, render_path

POSITION_LEFT = "left"
POSITION_RIGHT = "right"


class ConstituentLabel(enum.Enum):
    ARG1_PART = "Arg1Part"
    ARG2_PART = "Arg2Part"
    NONE = "None"


@dataclass(frozen=True)
class NodeFeatureVector:
    conn_lowercase: str
    case_category: str
    self_cat: str
    self_cat_parent: str
    self_cat_left_sibling: str
    self_cat_right_sibling: str
    path_to_self_cat: str
    node_context: str
    node_position: str

    def as_features(self):
        return asdict(self)


def prune_candidates(connective_selfcat):
    """Constituents directly connected to the connective-to-root path.

    With P the node path from connective_selfcat up to the root, returns
    every non-terminal node that is off P but whose parent is on P, in
    document order.
    """
    path = path_to_root(connective_selfcat)
    on_path = {id(node) for node in path}
    root = path[-1]
    return [node for node in root.walk()
            if not node.is_terminal
            and id(node) not in on_path
            and node.parent is not None
            and id(node.parent) in on_path]


def extract_node_features(node, connective, sentence):
    """Nine features for one candidate constituent: the six connective
    features plus the node's path to the connective category, its context,
    and its position (left or right of the connective's first token).
    """
    conn = extract_connective_features(connective, sentence)
    top = exact_cover_chain(sentence.tree,
                            (connective.token_begin, connective.token_end))[-1]
    position = POSITION_LEFT if node.token_begin < connective.token_begin else POSITION_RIGHT
    return NodeFeatureVector(
        conn_lowercase=conn.conn_lowercase,
        case_category=conn.case_category,
        self_cat=conn.self_cat,
        self_cat_parent=conn.self_cat_parent,
        self_cat_left_sibling=conn.self_cat_left_sibling,
        self_cat_right_sibling=conn.self_cat_right_sibling,
        path_to_self_cat=render_path(node, top),
        node_context="-".join(node_context(node)),
        node_position=position,
    )


def classify_constituents(candidates, model):
    """Label every (node, feature vector) pair with a ConstituentLabel."""
    labels = {}
    for node, vector in candidates:
        predicted = predict(model, vector.as_features())
        try:
            labels[node] = ConstituentLabel(predicted)
        except ValueError as exc:
            raise PredictionError(
                f"argument model produced unknown label '{predicted}'") from exc
    return labels


def gold_constituent_label(node, sentence, arg1_tokens, arg2_tokens):
    """Training-side projection of gold argument spans onto a candidate.

    A node counts as part of an argument only when every covered token lies
    inside that argument's gold span; anything else is labeled None, which
    keeps merging sound.
    """
    covered = {sentence.tokens[i].doc_index
               for i in range(node.token_begin, node.token_end)}
    if covered <= set(arg1_tokens):
        return ConstituentLabel.ARG1_PART
    if covered <= set(arg2_tokens):
        return ConstituentLabel.ARG2_PART
    return ConstituentLabel.NONE


def _doc_indices(node, sentence):
    return {sentence.tokens[i].doc_index
            for i in range(node.token_begin, node.token_end)}


def merge_arguments(labels, connective, document):
    """Merge labeled constituents into (arg1_tokens, arg2_tokens).

    Connective tokens are excluded from both spans and Arg2 wins token
    overlaps. Returns None when the relation must be dropped (no Arg1Part
    node and no previous sentence to fall back on). When nothing is labeled
    Arg2Part, Arg2 degenerates to the connective's sentence minus the
    connective and Arg1 tokens.
    """
    sentence = document.sentences[connective.sent_index]
    conn_tokens = {sentence.tokens[i].doc_index
                   for i in range(connective.token_begin, connective.token_end)}
    arg1_nodes = [n for n, label in labels.items() if label is ConstituentLabel.ARG1_PART]
    arg2_nodes = [n for n, label in labels.items() if label is ConstituentLabel.ARG2_PART]

    arg2 = set()
    for node in arg2_nodes:
        arg2 |= _doc_indices(node, sentence)
    arg2 -= conn_tokens

    if arg1_nodes:
        arg1 = set()
        for node in arg1_nodes:
            arg1 |= _doc_indices(node, sentence)
        arg1 -= conn_tokens
        arg1 -= arg2
    elif connective.sent_index == 0:
        return None
    else:
        previous = document.sentences[connective.sent_index - 1]
        arg1 = {token.doc_index for token in previous.tokens}

    if not arg2_nodes:
        arg2 = {token.doc_index for token in sentence.tokens}
        arg2 -= conn_tokens
        arg2 -= arg1

    return tuple(sorted(arg1)), tuple(sorted(arg2))
