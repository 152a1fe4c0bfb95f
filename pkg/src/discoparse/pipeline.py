"""End-to-end orchestration: training and parsing.

Training mines the connective lexicon from gold relations, builds the two
classifier datasets (usage from lexicon matches aligned to gold connective
spans, argument labels from gold spans projected onto pruned constituents)
and induces both trees. Parsing runs candidates through the usage filter,
labels and merges arguments, and annotates the most frequent sense; later
stages only ever see survivors of earlier ones.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass

from .argument_labeler import (classify_constituents, extract_node_features,
                               gold_constituent_label, merge_arguments,
                               prune_candidates)
from .connective_annotator import (USAGE_NEGATIVE, USAGE_POSITIVE,
                                   classify_usage, extract_connective_features,
                                   find_candidates)
from .connective_lexicon import (ConnectiveLexicon, lexicon_from_json,
                                 lexicon_to_json, mine_lexicon)
from .corpus_io import DiscourseRelation
from .decision_tree import Instance, train, tree_from_json, tree_to_json
from .errors import ModelFormatError, TrainingError
from .parse_tree import exact_cover_chain
from .sense_annotator import annotate_sense

logger = logging.getLogger(__name__)

MODEL_FORMAT_VERSION = 1


@dataclass
class ParserModel:
    lexicon: ConnectiveLexicon
    usage_tree: object
    argument_tree: object
    format_version: int = MODEL_FORMAT_VERSION


def _candidate_span(candidate, document):
    sentence = document.sentences[candidate.sent_index]
    return tuple(sentence.tokens[i].doc_index
                 for i in range(candidate.token_begin, candidate.token_end))


def _gold_connective_spans(gold):
    spans = {}
    for rel in gold:
        if rel.relation_type == "Explicit":
            spans.setdefault(rel.doc_id, set()).add(tuple(sorted(rel.connective_tokens)))
    return spans


def build_usage_dataset(documents, gold, lexicon):
    """One instance per lexicon match; positive iff the match coincides
    with a gold explicit connective span.
    """
    gold_spans = _gold_connective_spans(gold)
    instances = []
    for doc_id, document in documents.items():
        doc_spans = gold_spans.get(doc_id, set())
        for candidate in find_candidates(document, lexicon):
            sentence = document.sentences[candidate.sent_index]
            span = _candidate_span(candidate, document)
            label = USAGE_POSITIVE if span in doc_spans else USAGE_NEGATIVE
            features = extract_connective_features(candidate, sentence)
            instances.append(Instance(features.as_features(), label))
    return instances


def build_argument_dataset(documents, gold, lexicon):
    """Gold argument spans projected onto the pruned candidates of each
    reproducible gold connective. Gold connectives the matcher cannot
    reproduce (discontiguous spans, tokenization mismatches) are skipped
    with a warning.
    """
    candidate_index = {}
    for doc_id, document in documents.items():
        candidate_index[doc_id] = {
            _candidate_span(c, document): c
            for c in find_candidates(document, lexicon)}
    instances = []
    skipped = 0
    for rel in gold:
        if rel.relation_type != "Explicit":
            continue
        document = documents[rel.doc_id]
        candidate = candidate_index[rel.doc_id].get(tuple(sorted(rel.connective_tokens)))
        if candidate is None:
            skipped += 1
            logger.warning(
                "relation %s in '%s': gold connective span %s not reproduced "
                "by the matcher; skipped",
                rel.relation_id, rel.doc_id, rel.connective_tokens)
            continue
        sentence = document.sentences[candidate.sent_index]
        anchor = exact_cover_chain(
            sentence.tree, (candidate.token_begin, candidate.token_end))[0]
        for node in prune_candidates(anchor):
            vector = extract_node_features(node, candidate, sentence)
            label = gold_constituent_label(node, sentence,
                                           rel.arg1_tokens, rel.arg2_tokens)
            instances.append(Instance(vector.as_features(), label.value))
    if skipped:
        logger.warning("%d gold connectives skipped during training", skipped)
    return instances


def train_model(documents, gold_relations, min_leaf=2):
    """Mine the lexicon and train both classifiers from gold relations."""
    gold = list(gold_relations)
    if not gold:
        raise TrainingError("no gold relations to train on")
    lexicon = mine_lexicon(gold, documents)
    if not lexicon.entries:
        raise TrainingError("gold data contains no explicit relations")
    usage_dataset = build_usage_dataset(documents, gold, lexicon)
    if not usage_dataset:
        raise TrainingError("no connective candidates in the training documents")
    argument_dataset = build_argument_dataset(documents, gold, lexicon)
    if not argument_dataset:
        raise TrainingError("no argument-labeling instances could be built")
    logger.info("training: %d usage instances, %d argument instances",
                len(usage_dataset), len(argument_dataset))
    usage_tree = train(usage_dataset, min_leaf)
    argument_tree = train(argument_dataset, min_leaf)
    return ParserModel(lexicon, usage_tree, argument_tree)


def parse_document(document, model):
    """All explicit relations the model finds in one document.

    Relation ids are assigned sequentially from 0 within the document.
    Candidates rejected by the usage classifier contribute nothing; merge
    failures (connective in the first sentence with no Arg1 constituent)
    drop the relation.
    """
    relations = []
    dropped = 0
    for candidate in find_candidates(document, model.lexicon):
        sentence = document.sentences[candidate.sent_index]
        features = extract_connective_features(candidate, sentence)
        if not classify_usage(features, model.usage_tree):
            continue
        anchor = exact_cover_chain(
            sentence.tree, (candidate.token_begin, candidate.token_end))[0]
        pruned = prune_candidates(anchor)
        pairs = [(node, extract_node_features(node, candidate, sentence))
                 for node in pruned]
        labels = classify_constituents(pairs, model.argument_tree)
        merged = merge_arguments(labels, candidate, document)
        if merged is None:
            dropped += 1
            continue
        arg1, arg2 = merged
        relation = DiscourseRelation(
            doc_id=document.doc_id,
            relation_id=len(relations),
            relation_type="Explicit",
            connective_tokens=_candidate_span(candidate, document),
            arg1_tokens=arg1,
            arg2_tokens=arg2,
            senses=(),
        )
        relations.append(annotate_sense(relation, model.lexicon, document))
    if dropped:
        logger.debug("document '%s': dropped %d relations without a previous "
                     "sentence for Arg1", document.doc_id, dropped)
    return relations


def model_to_json(model):
    return {
        "format_version": model.format_version,
        "lexicon": lexicon_to_json(model.lexicon),
        "usage_tree": tree_to_json(model.usage_tree),
        "argument_tree": tree_to_json(model.argument_tree),
    }


def save_model(model, path):
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(model_to_json(model), handle, sort_keys=True, indent=2)
        handle.write("\n")


def load_model(path):
    with open(path, "r", encoding="utf-8") as handle:
        try:
            data = json.load(handle)
        except json.JSONDecodeError as exc:
            raise ModelFormatError(f"model file '{path}' is not JSON: {exc}") from exc
    version = data.get("format_version") if isinstance(data, dict) else None
    if version != MODEL_FORMAT_VERSION:
        raise ModelFormatError(
            f"model file '{path}' has format_version {version!r}, "
            f"this build reads version {MODEL_FORMAT_VERSION}")
    try:
        return ParserModel(
            lexicon=lexicon_from_json(data["lexicon"]),
            usage_tree=tree_from_json(data["usage_tree"]),
            argument_tree=tree_from_json(data["argument_tree"]),
            format_version=version,
        )
    except (KeyError, TypeError) as exc:
        raise ModelFormatError(f"model file '{path}' is incomplete: {exc}") from exc
