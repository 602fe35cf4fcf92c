"""Sentence splitting, whitespace tokenization, rule-based POS tagging, and
content-word filtering.

The tagger is deliberately small: an exact-match tag lexicon, ordered suffix
rules (longest suffix wins, earlier declaration wins on equal length), and a
NOUN default for anything unknown. The lemmatizer strips -ing/-ed/-es/-s with
doubling and silent-e repair, guarded by an exceptions map, so every decision
can be traced by eye.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, replace
from typing import TYPE_CHECKING, Iterable, Mapping, Sequence

if TYPE_CHECKING:
    from .lexicons import PosResources

POS_TAGS = frozenset({
    "NOUN", "VERB", "ADJ", "ADV", "PRON", "DET", "ADP",
    "CONJ", "NUM", "PART", "INTJ", "PUNCT", "X",
})

# Tags that never carry gesture-relevant content on their own.
NON_CONTENT_TAGS = frozenset({"DET", "ADP", "CONJ", "PRON", "PART", "PUNCT"})

# Sentence terminator only counts when followed by whitespace or end of input.
_SENTENCE_BREAK = re.compile(r"[.!?](?=\s|$)")

_VOWELS = frozenset("aeiou")
# Final doubled consonants that undouble after suffix stripping (ll/ss/zz stay).
_UNDOUBLE = frozenset("bdgkmnprt")


@dataclass(frozen=True)
class Token:
    """One surface token; pos/lemma/is_content are filled in by the tagger."""

    index: int
    surface: str
    lemma: str = ""
    pos: str = ""
    is_content: bool = False


@dataclass(frozen=True)
class Sentence:
    index: int
    text: str
    tokens: tuple[Token, ...] = ()


def split_sentences(text: str) -> list[Sentence]:
    """Split on . ! ? followed by whitespace or end of input.

    The terminator stays with its sentence and blank segments are dropped.
    Abbreviations are not special-cased, so "Mr. Smith rose." yields two
    sentences; the naive rule is the price of an auditable splitter.
    """
    segments: list[str] = []
    start = 0
    for match in _SENTENCE_BREAK.finditer(text):
        segments.append(text[start:match.end()])
        start = match.end()
    segments.append(text[start:])

    sentences: list[Sentence] = []
    for segment in segments:
        stripped = segment.strip()
        if stripped:
            sentences.append(Sentence(index=len(sentences), text=stripped))
    return sentences


def tokenize(sentence: Sentence) -> Sentence:
    """Whitespace split with leading/trailing punctuation runs detached.

    Interior punctuation (contractions, hyphens, decimal points) stays inside
    the token, so "don't" survives whole. Joining the token surfaces equals
    the sentence text with all whitespace removed.
    """
    surfaces: list[str] = []
    for chunk in sentence.text.split():
        lead = 0
        while lead < len(chunk) and not chunk[lead].isalnum():
            lead += 1
        if lead == len(chunk):
            surfaces.append(chunk)  # pure punctuation run
            continue
        trail = len(chunk)
        while trail > lead and not chunk[trail - 1].isalnum():
            trail -= 1
        if lead:
            surfaces.append(chunk[:lead])
        surfaces.append(chunk[lead:trail])
        if trail < len(chunk):
            surfaces.append(chunk[trail:])
    tokens = tuple(Token(index=i, surface=s) for i, s in enumerate(surfaces))
    return replace(sentence, tokens=tokens)


def tag_and_lemmatize(
    tokens: Sequence[Token], resources: "PosResources"
) -> tuple[Token, ...]:
    """Assign a coarse POS tag and a lowercase lemma to every token.

    Tag priority: exact tag-lexicon hit on the lowercase surface, then the
    longest matching suffix rule, then NOUN. Tokens without any alphanumeric
    character become PUNCT; digit-only tokens become NUM. A token is content
    unless its tag is a function-word tag or its surface is stopworded.
    """
    tagged: list[Token] = []
    for token in tokens:
        lower = token.surface.lower()
        if not any(ch.isalnum() for ch in token.surface):
            pos, lemma = "PUNCT", token.surface
        elif not any(ch.isalpha() for ch in token.surface):
            pos, lemma = "NUM", lower
        else:
            pos = resources.tag_lexicon.get(lower)
            if pos is None:
                pos = _suffix_tag(lower, resources.suffix_rules) or "NOUN"
            lemma = lemmatize(lower, resources.lemma_exceptions)
        is_content = pos not in NON_CONTENT_TAGS and lower not in resources.stopwords
        tagged.append(replace(token, lemma=lemma, pos=pos, is_content=is_content))
    return tuple(tagged)


def filter_words(tokens: Iterable[Token]) -> list[Token]:
    """Keep content tokens in their original order."""
    return [token for token in tokens if token.is_content]


def _suffix_tag(word: str, rules: Sequence[tuple[str, str]]) -> str | None:
    best_tag: str | None = None
    best_len = 0
    for suffix, tag in rules:
        if len(suffix) > best_len and len(word) > len(suffix) and word.endswith(suffix):
            best_tag, best_len = tag, len(suffix)
    return best_tag


def lemmatize(word: str, exceptions: Mapping[str, str]) -> str:
    """Strip -ing/-ed/-es/-s from a lowercase word, repairing the stem."""
    if word in exceptions:
        return exceptions[word]
    if word.endswith("ing") and len(word) >= 6:
        return _repair_stem(word[:-3])
    if word.endswith("ied") and len(word) >= 5:
        return word[:-3] + "y"
    if word.endswith("ed") and len(word) >= 5:
        return _repair_stem(word[:-2])
    if word.endswith("ies") and len(word) >= 5:
        return word[:-3] + "y"
    if word.endswith(("ses", "xes", "zes")) and len(word) >= 4:
        return word[:-2]
    if word.endswith(("ches", "shes")) and len(word) >= 5:
        return word[:-2]
    if word.endswith("s") and len(word) >= 4 and not word.endswith(("ss", "us", "is", "'s")):
        return word[:-1]
    return word


def _repair_stem(stem: str) -> str:
    # runn -> run, grabb -> grab; but fall/miss/buzz keep their doubles.
    if len(stem) >= 3 and stem[-1] == stem[-2] and stem[-1] in _UNDOUBLE:
        return stem[:-1]
    # danc -> dance, mov -> move, argu -> argue.
    if stem.endswith(("c", "u", "v")):
        return stem + "e"
    # mak -> make, hop -> hope; only for single-syllable CVC stems so that
    # multisyllable stems like visit/open stay untouched.
    if (
        len(stem) >= 3
        and stem[-1] not in _VOWELS
        and stem[-1] not in "wxy"
        and stem[-2] in _VOWELS
        and stem[-3] not in _VOWELS
        and _vowel_groups(stem) == 1
    ):
        return stem + "e"
    return stem


def _vowel_groups(word: str) -> int:
    count = 0
    prev_vowel = False
    for ch in word:
        is_vowel = ch in _VOWELS
        if is_vowel and not prev_vowel:
            count += 1
        prev_vowel = is_vowel
    return count
