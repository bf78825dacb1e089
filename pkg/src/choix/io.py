"""JSON wire formats for assessments and option sets.

An assessment document looks like::

    {"dimension": 2,
     "pairs": [{"chosen": [[5, -3], [3, -2]], "rejected": [[1, -1], [-2, 1]]},
               {"chosen": [[-4, 8]], "rejected": [[3, 1]]}]}

and an option-set document like ``{"options": [[-3, 4], [0, 1], [4, -3]]}``.
"""

from __future__ import annotations

import json
from typing import Any

from .core import Assessment, AssessmentPair, InputError, Options, as_options


def parse_assessment(doc: Any) -> Assessment:
    if not isinstance(doc, dict):
        raise InputError("assessment document must be a JSON object")
    try:
        dimension = int(doc["dimension"])
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError("assessment document needs an integer 'dimension'") from exc
    raw_pairs = doc.get("pairs", [])
    if not isinstance(raw_pairs, list):
        raise InputError("'pairs' must be a list")
    pairs = []
    for i, raw in enumerate(raw_pairs):
        if not isinstance(raw, dict) or "chosen" not in raw:
            raise InputError(f"pair {i} must be an object with 'chosen' and 'rejected'")
        try:
            pairs.append(
                AssessmentPair(
                    chosen=as_options(raw["chosen"]),
                    rejected=as_options(raw.get("rejected", [])),
                )
            )
        except InputError as exc:
            raise InputError(f"pair {i}: {exc}") from exc
    return Assessment(dimension=dimension, pairs=tuple(pairs))


def parse_options(doc: Any) -> Options:
    if not isinstance(doc, dict) or "options" not in doc:
        raise InputError("option-set document must be an object with 'options'")
    options = as_options(doc["options"])
    if not options:
        raise InputError("the option set must be non-empty")
    return options


def assessment_to_doc(a: Assessment) -> dict:
    return {
        "dimension": a.dimension,
        "pairs": [
            {"chosen": [list(v) for v in p.chosen],
             "rejected": [list(w) for w in p.rejected]}
            for p in a.pairs
        ],
    }


def options_to_doc(options: Options) -> dict:
    return {"options": [list(v) for v in options]}


def load_json(path: str) -> Any:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc


def dump_canonical(doc: Any) -> str:
    """Canonical JSON: sorted keys, no trailing whitespace."""
    return json.dumps(doc, sort_keys=True, separators=(",", ": "))
