"""Most-frequent-sense annotation for explicit relations."""

from __future__ import annotations

import dataclasses

from .connective_lexicon import connective_key, most_frequent_sense
from .errors import DiscoParseError


def annotate_sense(relation, lexicon, document):
    """Replace the relation's senses with its connective's most frequent one.

    Only the senses field changes. The connective surface must be a lexicon
    key; a miss means the matcher and the lexicon are out of sync, which is
    a pipeline invariant violation, not a recoverable condition.
    """
    flat = document.all_tokens()
    key = connective_key(flat[i].surface for i in sorted(relation.connective_tokens))
    try:
        sense = most_frequent_sense(lexicon, key)
    except KeyError as exc:
        raise DiscoParseError(
            f"connective '{key}' missing from lexicon; matcher and lexicon "
            f"are out of sync") from exc
    return dataclasses.replace(relation, senses=(sense,))
