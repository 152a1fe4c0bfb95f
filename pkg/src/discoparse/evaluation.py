"""Exact-match scoring of predicted relations against gold.

Four dimensions are reported: connective identification, Arg1, Arg2 and the
full relation. Matching is exact equality of token index sets; argument
credit requires the connective to match as well, and full-relation credit
additionally requires a sense match. Pairing is greedy one-to-one in
document order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputFormatError

DIMENSIONS = ("connective", "arg1", "arg2", "relation")


@dataclass(frozen=True)
class PRF:
    precision: float
    recall: float
    f1: float
    true_positives: int
    predicted_count: int
    gold_count: int


def _prf(tp, predicted, gold):
    precision = tp / predicted if predicted else 0.0
    recall = tp / gold if gold else 0.0
    f1 = (2 * precision * recall / (precision + recall)
          if precision + recall else 0.0)
    return PRF(precision, recall, f1, tp, predicted, gold)


def _connective_match(gold_rel, pred_rel):
    return set(gold_rel.connective_tokens) == set(pred_rel.connective_tokens)


def _arg1_match(gold_rel, pred_rel):
    return (_connective_match(gold_rel, pred_rel)
            and set(gold_rel.arg1_tokens) == set(pred_rel.arg1_tokens))


def _arg2_match(gold_rel, pred_rel):
    return (_connective_match(gold_rel, pred_rel)
            and set(gold_rel.arg2_tokens) == set(pred_rel.arg2_tokens))


def _relation_match(gold_rel, pred_rel):
    # A single predicted sense matching any gold sense counts.
    return (_connective_match(gold_rel, pred_rel)
            and set(gold_rel.arg1_tokens) == set(pred_rel.arg1_tokens)
            and set(gold_rel.arg2_tokens) == set(pred_rel.arg2_tokens)
            and bool(set(gold_rel.senses) & set(pred_rel.senses)))


_MATCHERS = {
    "connective": _connective_match,
    "arg1": _arg1_match,
    "arg2": _arg2_match,
    "relation": _relation_match,
}


def _check_unique_ids(relations, side):
    seen = set()
    for rel in relations:
        key = (rel.doc_id, rel.relation_id)
        if key in seen:
            raise InputFormatError(
                f"duplicate {side} relation id {rel.relation_id} "
                f"in document '{rel.doc_id}'")
        seen.add(key)


def _greedy_true_positives(gold_rels, pred_rels, match):
    used = set()
    tp = 0
    for gold_rel in gold_rels:
        for j, pred_rel in enumerate(pred_rels):
            if j in used:
                continue
            if match(gold_rel, pred_rel):
                used.add(j)
                tp += 1
                break
    return tp


def score(gold, predicted):
    """PRF per dimension over the explicit relations of both sides."""
    _check_unique_ids(gold, "gold")
    _check_unique_ids(predicted, "predicted")
    gold_explicit = [r for r in gold if r.relation_type == "Explicit"]
    pred_explicit = [r for r in predicted if r.relation_type == "Explicit"]
    by_doc = {}
    for rel in gold_explicit:
        by_doc.setdefault(rel.doc_id, ([], []))[0].append(rel)
    for rel in pred_explicit:
        by_doc.setdefault(rel.doc_id, ([], []))[1].append(rel)
    true_positives = dict.fromkeys(DIMENSIONS, 0)
    for doc_id in sorted(by_doc):
        gold_rels, pred_rels = by_doc[doc_id]
        for dimension, match in _MATCHERS.items():
            true_positives[dimension] += _greedy_true_positives(
                gold_rels, pred_rels, match)
    return {dimension: _prf(true_positives[dimension],
                            len(pred_explicit), len(gold_explicit))
            for dimension in DIMENSIONS}


def report_dict(scores):
    """Plain-JSON form of a score report."""
    return {dimension: {"precision": prf.precision,
                        "recall": prf.recall,
                        "f1": prf.f1,
                        "tp": prf.true_positives,
                        "predicted": prf.predicted_count,
                        "gold": prf.gold_count}
            for dimension, prf in scores.items()}


def format_table(scores):
    header = f"{'dimension':<12} {'precision':>9} {'recall':>9} {'f1':>9} {'tp':>6} {'pred':>6} {'gold':>6}"
    lines = [header, "-" * len(header)]
    for dimension, prf in scores.items():
        lines.append(
            f"{dimension:<12} {prf.precision:>9.4f} {prf.recall:>9.4f} "
            f"{prf.f1:>9.4f} {prf.true_positives:>6} "
            f"{prf.predicted_count:>6} {prf.gold_count:>6}")
    return "\n".join(lines)
