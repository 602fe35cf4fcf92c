"""Candidate gestures per sentence: join, parameterize, rank, select one.

A candidate is a content word carrying both a schema annotation and an affect
assignment. Affect drives the motion parameters (arousal scales speed and
amplitude, valence biases gesture height); ranking combines affect extremity,
POS class, and schema confidence, and exactly one gesture survives per
sentence. Sentences with content but no schema hit fall back to a rhythmic
beat on the most affect-extreme word.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .affect import VadTriple, WordAffect
from .schemas import SchemaAnnotation
from .textproc import Token
from .timing import WordTiming

ICONIC = "ICONIC"
BEAT = "BEAT"

# Ranking preference by word class: verbs act, nouns name, the rest trail.
POS_RANK_WEIGHTS: Mapping[str, float] = {"VERB": 1.0, "NOUN": 0.8, "ADJ": 0.6}
DEFAULT_POS_WEIGHT = 0.4


class InvalidWeightsError(ValueError):
    """Raised for negative ranker weights or an all-zero weight vector."""


@dataclass(frozen=True)
class RankerWeights:
    affect: float = 0.5
    pos: float = 0.3
    schema: float = 0.2

    def validate(self) -> None:
        values = (self.affect, self.pos, self.schema)
        if any(w < 0.0 for w in values):
            raise InvalidWeightsError(f"negative ranker weight in {values}")
        if all(w == 0.0 for w in values):
            raise InvalidWeightsError("all ranker weights are zero")


@dataclass(frozen=True)
class GestureParams:
    speed_factor: float
    amplitude_factor: float
    vertical_bias: float


@dataclass
class GestureCandidate:
    token_index: int
    kind: str  # ICONIC or BEAT
    schema: str | None
    schema_weight: float
    pos: str
    vad: VadTriple
    timing: WordTiming
    score: float = 0.0


def extract_params(vad: VadTriple) -> GestureParams:
    """Affect to motion parameters; the neutral triple maps to the identity.

    Arousal scales tempo and spatial extent linearly over [0.5, 1.5]; valence
    shifts gesture height over [-0.25, 0.25]. Dominance is carried through the
    data model but does not drive motion.
    """
    return GestureParams(
        speed_factor=0.5 + vad.arousal,
        amplitude_factor=0.5 + vad.arousal,
        vertical_bias=0.5 * (vad.valence - 0.5),
    )


def pos_weight(pos: str) -> float:
    return POS_RANK_WEIGHTS.get(pos, DEFAULT_POS_WEIGHT)


def join_candidates(
    tokens: Sequence[Token],
    affects: Sequence[WordAffect],
    annotations: Sequence[SchemaAnnotation],
    timings: Sequence[WordTiming],
) -> list[GestureCandidate]:
    """Inner join of schema annotations and affect assignments on token index."""
    affect_by_index = {a.token_index: a for a in affects}
    token_by_index = {t.index: t for t in tokens}
    candidates: list[GestureCandidate] = []
    for annotation in sorted(annotations, key=lambda a: a.token_index):
        affect = affect_by_index.get(annotation.token_index)
        if affect is None:
            continue
        candidates.append(
            GestureCandidate(
                token_index=annotation.token_index,
                kind=ICONIC,
                schema=annotation.schema,
                schema_weight=annotation.weight,
                pos=token_by_index[annotation.token_index].pos,
                vad=affect.vad,
                timing=timings[annotation.token_index],
            )
        )
    return candidates


def score_terms(candidate: GestureCandidate, weights: RankerWeights) -> dict[str, float]:
    """Weighted score contributions; their sum is the candidate's score."""
    return {
        "affect": weights.affect * candidate.vad.extremity(),
        "pos": weights.pos * pos_weight(candidate.pos),
        "schema": weights.schema * candidate.schema_weight,
    }


def rank_and_select(
    candidates: Sequence[GestureCandidate],
    weights: RankerWeights = RankerWeights(),
) -> GestureCandidate | None:
    """Score every candidate and return the winner, None for empty input.

    Ties go to the smallest token index. Scores are written back onto the
    candidates so callers can inspect the full ranking.
    """
    weights.validate()
    best: GestureCandidate | None = None
    for candidate in sorted(candidates, key=lambda c: c.token_index):
        terms = score_terms(candidate, weights)
        candidate.score = terms["affect"] + terms["pos"] + terms["schema"]
        if best is None or candidate.score > best.score:
            best = candidate
    return best


def beat_fallback(
    content_tokens: Sequence[Token],
    affects: Sequence[WordAffect],
    sentence_vad: VadTriple,
    timings: Sequence[WordTiming],
    weights: RankerWeights = RankerWeights(),
) -> GestureCandidate | None:
    """Rhythmic fallback when a contentful sentence has no iconic candidate.

    Anchors on the highest-extremity content word (earliest on ties) and
    carries the sentence-level affect. Returns None when there is nothing to
    anchor on.
    """
    if not affects:
        return None
    token_by_index = {t.index: t for t in content_tokens}
    anchor = affects[0]
    for affect in affects[1:]:
        if affect.vad.extremity() > anchor.vad.extremity():
            anchor = affect
    candidate = GestureCandidate(
        token_index=anchor.token_index,
        kind=BEAT,
        schema=None,
        schema_weight=0.0,
        pos=token_by_index[anchor.token_index].pos,
        vad=sentence_vad,
        timing=timings[anchor.token_index],
    )
    terms = score_terms(candidate, weights)
    candidate.score = terms["affect"] + terms["pos"] + terms["schema"]
    return candidate
