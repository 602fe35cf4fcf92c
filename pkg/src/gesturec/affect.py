"""Valence/arousal/dominance assignment for content words.

Each content word takes its triple straight from the affect lexicon when the
lemma is covered; uncovered words fall back to the sentence-level sentiment,
the mean triple over the covered content words (neutral when nothing is
covered). A negator shortly before a covered word reflects that word's
valence around the midpoint for the sentence mean.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Sequence

from .textproc import Token

if TYPE_CHECKING:
    from .lexicons import VadLexicon

LEXICAL = "LEXICAL"
SENTENCE_FALLBACK = "SENTENCE_FALLBACK"

DEFAULT_NEGATORS: tuple[str, ...] = ("not", "no", "never", "n't")

# How far back (in unfiltered tokens) a negator can reach.
NEGATION_WINDOW = 3


@dataclass(frozen=True)
class VadTriple:
    valence: float
    arousal: float
    dominance: float

    def __post_init__(self) -> None:
        for name in ("valence", "arousal", "dominance"):
            value = getattr(self, name)
            if not 0.0 <= value <= 1.0:
                raise ValueError(f"{name} out of [0, 1]: {value!r}")

    def extremity(self) -> float:
        """Distance from the neutral point, normalized into [0, 1]."""
        return (
            abs(self.valence - 0.5)
            + abs(self.arousal - 0.5)
            + abs(self.dominance - 0.5)
        ) / 1.5


NEUTRAL = VadTriple(0.5, 0.5, 0.5)


@dataclass(frozen=True)
class WordAffect:
    token_index: int
    vad: VadTriple
    source: str  # LEXICAL or SENTENCE_FALLBACK


def lookup_word_vad(lemma: str, lexicon: "VadLexicon") -> VadTriple | None:
    """Exact-match lookup on the lowercase lemma; a miss is a normal outcome."""
    return lexicon.entries.get(lemma)


def sentence_sentiment(
    tokens: Sequence[Token],
    lexicon: "VadLexicon",
    negators: Sequence[str] = DEFAULT_NEGATORS,
) -> VadTriple:
    """Mean VAD over the covered content words of a sentence.

    Takes the full (unfiltered) token sequence because negation looks at the
    tokens immediately before each covered word. Returns the neutral triple
    when no content word is covered.
    """
    values: list[VadTriple] = []
    for token in tokens:
        if not token.is_content:
            continue
        hit = lookup_word_vad(token.lemma, lexicon)
        if hit is None:
            continue
        if _negated(tokens, token.index, negators):
            hit = VadTriple(1.0 - hit.valence, hit.arousal, hit.dominance)
        values.append(hit)
    if not values:
        return NEUTRAL
    n = len(values)
    return VadTriple(
        sum(v.valence for v in values) / n,
        sum(v.arousal for v in values) / n,
        sum(v.dominance for v in values) / n,
    )


def assign_affect(
    tokens: Sequence[Token],
    lexicon: "VadLexicon",
    negators: Sequence[str] = DEFAULT_NEGATORS,
) -> list[WordAffect]:
    """One WordAffect per content token, lexical when covered else fallback."""
    fallback = sentence_sentiment(tokens, lexicon, negators)
    affects: list[WordAffect] = []
    for token in tokens:
        if not token.is_content:
            continue
        hit = lookup_word_vad(token.lemma, lexicon)
        if hit is not None:
            affects.append(WordAffect(token.index, hit, LEXICAL))
        else:
            affects.append(WordAffect(token.index, fallback, SENTENCE_FALLBACK))
    return affects


def _negated(tokens: Sequence[Token], index: int, negators: Sequence[str]) -> bool:
    for token in tokens[max(0, index - NEGATION_WINDOW):index]:
        if _is_negator(token.surface, negators):
            return True
    return False


def _is_negator(surface: str, negators: Sequence[str]) -> bool:
    lower = surface.lower()
    for negator in negators:
        if lower == negator:
            return True
        # Entries with an apostrophe ("n't") match as contraction suffixes,
        # since tokenization keeps contractions whole.
        if "'" in negator and lower.endswith(negator):
            return True
    return False
