from __future__ import annotations

import pytest

from gesturec.textproc import Sentence, tokenize
from gesturec.timing import (
    NoLettersError,
    TimingConfig,
    WordTiming,
    count_syllables,
    estimate_timing,
    spoken_bounds,
)


def _sentences(text: str) -> list[Sentence]:
    from gesturec.textproc import split_sentences

    return [tokenize(s) for s in split_sentences(text)]


@pytest.mark.parametrize(
    "word, syllables",
    [
        ("cat", 1),
        ("beautiful", 3),  # vowel groups eau / i / u
        ("make", 1),  # silent final e after a consonant
        ("the", 1),  # the discount never drops below one
        ("happy", 2),  # y is vocalic
        ("rhythm", 1),
        ("idea", 2),  # groups i / ea
        ("don't", 1),
    ],
)
def test_count_syllables(word, syllables):
    assert count_syllables(word) == syllables


def test_count_syllables_requires_letters():
    with pytest.raises(NoLettersError):
        count_syllables("...")
    with pytest.raises(NoLettersError):
        count_syllables("42")


def test_grab_the_box_timing_oracle():
    timings = estimate_timing(_sentences("Grab the box"), TimingConfig())
    (sentence,) = timings
    assert [t.start_s for t in sentence] == [0.0, 0.25, 0.5]
    assert [t.duration_s for t in sentence] == [0.2, 0.2, 0.2]


def test_empty_input_gives_empty_timing():
    assert estimate_timing([], TimingConfig()) == []


def test_sentence_pause_between_sentences():
    timings = estimate_timing(_sentences("Go. Go."), TimingConfig())
    first, second = timings
    assert first[0].start_s == 0.0
    assert first[0].duration_s == 0.2
    # 0.2 word end + 0.3 pause
    assert second[0].start_s == 0.5


def test_punctuation_has_zero_duration_at_previous_word_end():
    timings = estimate_timing(_sentences("Go now."), TimingConfig())
    (sentence,) = timings
    go, now, period = sentence
    assert period.duration_s == 0.0
    assert period.start_s == now.end_s


def test_monotone_word_starts():
    timings = estimate_timing(
        _sentences("The happy dog ran far away. It was a wonderful day."),
        TimingConfig(),
    )
    starts = [t.start_s for sentence in timings for t in sentence if t.duration_s > 0]
    assert all(b > a for a, b in zip(starts, starts[1:]))


def test_total_duration_is_exact_sum_of_parts():
    cfg = TimingConfig()
    sentences = _sentences("Grab the box. Push it far away.")
    timings = estimate_timing(sentences, cfg)
    expected = 0.0
    first_sentence = True
    for sentence, sentence_timings in zip(sentences, timings):
        spoke = False
        for token, timing in zip(sentence.tokens, sentence_timings):
            if timing.duration_s == 0.0:
                continue
            if spoke:
                expected += cfg.interword_gap_s
            elif not first_sentence:
                expected += cfg.sentence_pause_s
            expected += timing.duration_s
            spoke = True
        if spoke:
            first_sentence = False
    last_spoken = [t for t in timings[-1] if t.duration_s > 0]
    assert last_spoken[-1].end_s == expected


def test_doubling_syllable_rate_doubles_every_duration():
    sentences = _sentences("The wonderful journey began yesterday.")
    base = estimate_timing(sentences, TimingConfig(syllable_duration_s=0.17))
    doubled = estimate_timing(sentences, TimingConfig(syllable_duration_s=0.34))
    for a, b in zip(base[0], doubled[0]):
        assert b.duration_s == 2.0 * a.duration_s


def test_digit_tokens_speak_one_syllable():
    timings = estimate_timing(_sentences("wait 42 now"), TimingConfig())
    (sentence,) = timings
    assert sentence[1].duration_s == 0.2


def test_spoken_bounds():
    timings = estimate_timing(_sentences("Grab the box."), TimingConfig())
    assert spoken_bounds(timings[0]) == (0.0, 0.7)
    assert spoken_bounds([WordTiming(0.0, 0.0)]) is None


def test_config_rejects_non_positive_values():
    with pytest.raises(ValueError):
        TimingConfig(syllable_duration_s=0.0)
    with pytest.raises(ValueError):
        TimingConfig(interword_gap_s=-0.1)
