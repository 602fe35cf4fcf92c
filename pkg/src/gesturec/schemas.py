"""Image-schema tagging of content words from a weighted lexicon.

The inventory is a fixed set of ten embodied patterns; each covered word gets
exactly one annotation, its highest-weight schema, with weight ties broken by
inventory order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterable, Sequence

from .textproc import Token

if TYPE_CHECKING:
    from .lexicons import SchemaLexicon

SCHEMA_INVENTORY: tuple[str, ...] = (
    "CONTAINER",
    "OBJECT",
    "PATH",
    "SOURCE_PATH_GOAL",
    "UP_DOWN",
    "NEAR_FAR",
    "FORCE",
    "BALANCE",
    "CYCLE",
    "SCALE",
)

_SCHEMA_RANK = {tag: rank for rank, tag in enumerate(SCHEMA_INVENTORY)}


@dataclass(frozen=True)
class SchemaAnnotation:
    token_index: int
    schema: str
    weight: float


def map_schemas(
    content_tokens: Iterable[Token], lexicon: "SchemaLexicon"
) -> list[SchemaAnnotation]:
    """Annotate each covered content token with its strongest schema.

    Tokens whose lemma misses the lexicon produce nothing; at most one
    annotation per token.
    """
    annotations: list[SchemaAnnotation] = []
    for token in content_tokens:
        entries = lexicon.entries.get(token.lemma)
        if not entries:
            continue
        best_tag, best_weight = entries[0]
        for tag, weight in entries[1:]:
            if weight > best_weight or (
                weight == best_weight and _SCHEMA_RANK[tag] < _SCHEMA_RANK[best_tag]
            ):
                best_tag, best_weight = tag, weight
        annotations.append(SchemaAnnotation(token.index, best_tag, best_weight))
    return annotations
