"""Per-word speech timing from a deterministic syllable-rate model.

Stands in for a live TTS clock: every word speaks at a fixed per-syllable
rate, consecutive words are separated by a fixed gap, sentences by a fixed
pause. Absolute times flow downstream, so a real forced aligner could replace
this module without touching later stages.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .textproc import Sentence

_VOWELS = frozenset("aeiouy")


class NoLettersError(ValueError):
    """Raised when a syllable count is requested for a letterless token."""


@dataclass(frozen=True)
class TimingConfig:
    syllable_duration_s: float = 0.20
    interword_gap_s: float = 0.05
    sentence_pause_s: float = 0.30

    def __post_init__(self) -> None:
        for name in ("syllable_duration_s", "interword_gap_s", "sentence_pause_s"):
            if getattr(self, name) <= 0.0:
                raise ValueError(f"{name} must be strictly positive")


@dataclass(frozen=True)
class WordTiming:
    start_s: float
    duration_s: float

    def __post_init__(self) -> None:
        if self.start_s < 0.0 or self.duration_s < 0.0:
            raise ValueError("timing values must be non-negative")

    @property
    def end_s(self) -> float:
        return self.start_s + self.duration_s


def count_syllables(word: str) -> int:
    """Count maximal vowel groups (y counts as a vowel), minimum 1.

    A final silent e preceded by a consonant is discounted when more than one
    group was found, so "make" counts 1 while "the" stays at 1.
    """
    letters = [ch for ch in word.lower() if ch.isalpha()]
    if not letters:
        raise NoLettersError(f"token has no letters: {word!r}")
    count = 0
    prev_vowel = False
    for ch in letters:
        is_vowel = ch in _VOWELS
        if is_vowel and not prev_vowel:
            count += 1
        prev_vowel = is_vowel
    if count > 1 and letters[-1] == "e" and letters[-2] not in _VOWELS:
        count -= 1
    return max(count, 1)


def estimate_timing(
    sentences: Sequence[Sentence], cfg: TimingConfig
) -> list[list[WordTiming]]:
    """Start time and duration for every token of every sentence.

    Words last syllables * syllable_duration_s and are separated by the
    inter-word gap; sentences are separated by the sentence pause. Punctuation
    tokens get zero duration pinned at the preceding word's end; digit-only
    tokens count as one syllable. A sentence with nothing spoken does not
    advance the clock.
    """
    all_timings: list[list[WordTiming]] = []
    cursor = 0.0
    for sentence in sentences:
        timings: list[WordTiming] = []
        prev_end = cursor
        spoke = False
        for token in sentence.tokens:
            if any(ch.isalpha() for ch in token.surface):
                syllables = count_syllables(token.surface)
            elif any(ch.isdigit() for ch in token.surface):
                syllables = 1
            else:
                timings.append(WordTiming(start_s=prev_end, duration_s=0.0))
                continue
            start = prev_end + cfg.interword_gap_s if spoke else prev_end
            duration = syllables * cfg.syllable_duration_s
            timings.append(WordTiming(start_s=start, duration_s=duration))
            prev_end = start + duration
            spoke = True
        all_timings.append(timings)
        if spoke:
            cursor = prev_end + cfg.sentence_pause_s
    return all_timings


def spoken_bounds(timings: Sequence[WordTiming]) -> tuple[float, float] | None:
    """(start, end) of the spoken part of a sentence, None if nothing spoken."""
    spoken = [t for t in timings if t.duration_s > 0.0]
    if not spoken:
        return None
    return spoken[0].start_s, spoken[-1].end_s
