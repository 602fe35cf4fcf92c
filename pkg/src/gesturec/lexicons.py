"""Loaders for the lexical resources the pipeline consults.

Three resources, all immutable after load:

* affect lexicon: TSV, ``word<TAB>valence<TAB>arousal<TAB>dominance`` with
  ``#`` comment lines, every component in [0, 1];
* schema lexicon: JSON ``{"entries": {lemma: [{"schema": tag, "weight": w}]}}``
  with weights in (0, 1] and tags from the fixed inventory;
* POS resources: JSON ``{"tags": {...}, "suffix_rules": [[suffix, tag], ...],
  "stopwords": [...]}`` plus optional ``lemma_exceptions`` and ``negators``.

All keys are case-folded to lowercase on load.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import IO, Iterable, Mapping

from .affect import DEFAULT_NEGATORS, VadTriple
from .schemas import SCHEMA_INVENTORY
from .textproc import POS_TAGS


class LexiconError(Exception):
    """Base class for resource loading failures."""


class MalformedLineError(LexiconError):
    def __init__(self, line_no: int, reason: str):
        super().__init__(f"line {line_no}: {reason}")
        self.line_no = line_no


class OutOfRangeError(LexiconError):
    def __init__(self, line_no: int, reason: str):
        super().__init__(f"line {line_no}: {reason}")
        self.line_no = line_no


class UnknownSchemaTagError(LexiconError):
    def __init__(self, lemma: str, tag: object):
        super().__init__(f"unknown schema tag {tag!r} for lemma {lemma!r}")
        self.lemma = lemma
        self.tag = tag


class InvalidWeightError(LexiconError):
    def __init__(self, lemma: str, weight: object):
        super().__init__(f"weight out of (0, 1] for lemma {lemma!r}: {weight!r}")
        self.lemma = lemma
        self.weight = weight


class ParseError(LexiconError):
    pass


@dataclass(frozen=True)
class VadLexicon:
    entries: Mapping[str, VadTriple]
    warnings: tuple[str, ...] = ()

    def lookup(self, lemma: str) -> VadTriple | None:
        return self.entries.get(lemma)

    def __len__(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class SchemaLexicon:
    # lemma -> ((schema tag, weight), ...) sorted by descending weight
    entries: Mapping[str, tuple[tuple[str, float], ...]]

    def __len__(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class PosResources:
    tag_lexicon: Mapping[str, str]
    suffix_rules: tuple[tuple[str, str], ...]
    stopwords: frozenset[str]
    lemma_exceptions: Mapping[str, str] = field(default_factory=dict)
    negators: tuple[str, ...] = DEFAULT_NEGATORS


def _as_text(source: str | IO[str]) -> str:
    if hasattr(source, "read"):
        return source.read()  # type: ignore[union-attr]
    return source


def load_vad_lexicon(source: str | IO[str] | Iterable[str]) -> VadLexicon:
    """Parse the TSV affect lexicon.

    Blank lines and ``#`` comments are skipped. On duplicate words the first
    occurrence wins and a warning is recorded. Raises MalformedLineError for a
    line without exactly four tab-separated fields or with non-numeric values,
    OutOfRangeError for a component outside [0, 1].
    """
    if hasattr(source, "read"):
        lines: Iterable[str] = _as_text(source).splitlines()  # type: ignore[arg-type]
    elif isinstance(source, str):
        lines = source.splitlines()
    else:
        lines = source
    entries: dict[str, VadTriple] = {}
    warnings: list[str] = []
    for line_no, raw in enumerate(lines, start=1):
        line = raw.rstrip("\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 4:
            raise MalformedLineError(line_no, f"expected 4 tab-separated fields, got {len(fields)}")
        word = fields[0].strip().lower()
        if not word:
            raise MalformedLineError(line_no, "empty word field")
        try:
            values = [float(f) for f in fields[1:]]
        except ValueError:
            raise MalformedLineError(line_no, "non-numeric affect value") from None
        for value in values:
            if not 0.0 <= value <= 1.0:
                raise OutOfRangeError(line_no, f"affect value out of [0, 1]: {value!r}")
        if word in entries:
            warnings.append(f"line {line_no}: duplicate entry for {word!r} ignored")
            continue
        entries[word] = VadTriple(*values)
    return VadLexicon(entries=entries, warnings=tuple(warnings))


def load_schema_lexicon(source: str | IO[str]) -> SchemaLexicon:
    """Parse and validate the JSON schema lexicon.

    Rejects unknown schema tags, weights outside (0, 1], duplicate tags per
    lemma, and empty entry lists. Entries are normalized to descending weight
    order (stable, so declared order survives among equal weights).
    """
    try:
        doc = json.loads(_as_text(source))
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict) or not isinstance(doc.get("entries"), dict):
        raise ParseError('expected an object with an "entries" mapping')
    entries: dict[str, tuple[tuple[str, float], ...]] = {}
    for raw_lemma, raw_list in doc["entries"].items():
        lemma = str(raw_lemma).strip().lower()
        if not lemma:
            raise ParseError("empty lemma key")
        if not isinstance(raw_list, list) or not raw_list:
            raise ParseError(f"lemma {lemma!r} needs a non-empty list of schema entries")
        pairs: list[tuple[str, float]] = []
        seen: set[str] = set()
        for item in raw_list:
            if not isinstance(item, dict) or "schema" not in item or "weight" not in item:
                raise ParseError(f"lemma {lemma!r}: each entry needs schema and weight")
            tag = item["schema"]
            if not isinstance(tag, str) or tag not in SCHEMA_INVENTORY:
                raise UnknownSchemaTagError(lemma, tag)
            weight = item["weight"]
            if isinstance(weight, bool) or not isinstance(weight, (int, float)):
                raise InvalidWeightError(lemma, weight)
            weight = float(weight)
            if not 0.0 < weight <= 1.0:
                raise InvalidWeightError(lemma, weight)
            if tag in seen:
                raise ParseError(f"lemma {lemma!r}: duplicate schema tag {tag}")
            seen.add(tag)
            pairs.append((tag, weight))
        pairs.sort(key=lambda pair: -pair[1])
        entries[lemma] = tuple(pairs)
    return SchemaLexicon(entries=entries)


def schema_lexicon_document(lexicon: SchemaLexicon) -> dict:
    """Serializable document form; reloading it yields an equal lexicon."""
    return {
        "entries": {
            lemma: [{"schema": tag, "weight": weight} for tag, weight in pairs]
            for lemma, pairs in lexicon.entries.items()
        }
    }


def load_pos_resources(source: str | IO[str]) -> PosResources:
    """Parse and validate the JSON POS resources document."""
    try:
        doc = json.loads(_as_text(source))
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ParseError("expected a JSON object")

    raw_tags = doc.get("tags", {})
    if not isinstance(raw_tags, dict):
        raise ParseError('"tags" must be a mapping')
    tag_lexicon: dict[str, str] = {}
    for word, tag in raw_tags.items():
        if tag not in POS_TAGS:
            raise ParseError(f"unknown POS tag {tag!r} for word {word!r}")
        tag_lexicon[str(word).strip().lower()] = tag

    raw_rules = doc.get("suffix_rules", [])
    if not isinstance(raw_rules, list):
        raise ParseError('"suffix_rules" must be a list')
    suffix_rules: list[tuple[str, str]] = []
    for rule in raw_rules:
        if not isinstance(rule, (list, tuple)) or len(rule) != 2:
            raise ParseError(f"suffix rule must be a [suffix, tag] pair: {rule!r}")
        suffix, tag = rule
        if not suffix or not isinstance(suffix, str):
            raise ParseError(f"invalid suffix: {suffix!r}")
        if tag not in POS_TAGS:
            raise ParseError(f"unknown POS tag {tag!r} for suffix {suffix!r}")
        suffix_rules.append((suffix.lower(), tag))

    raw_stop = doc.get("stopwords", [])
    if not isinstance(raw_stop, list):
        raise ParseError('"stopwords" must be a list')
    stopwords = frozenset(str(w).strip().lower() for w in raw_stop)

    raw_exceptions = doc.get("lemma_exceptions", {})
    if not isinstance(raw_exceptions, dict):
        raise ParseError('"lemma_exceptions" must be a mapping')
    lemma_exceptions = {
        str(k).strip().lower(): str(v).strip().lower() for k, v in raw_exceptions.items()
    }

    raw_negators = doc.get("negators")
    if raw_negators is None:
        negators = DEFAULT_NEGATORS
    elif isinstance(raw_negators, list):
        negators = tuple(str(w).strip().lower() for w in raw_negators)
    else:
        raise ParseError('"negators" must be a list')

    return PosResources(
        tag_lexicon=tag_lexicon,
        suffix_rules=tuple(suffix_rules),
        stopwords=stopwords,
        lemma_exceptions=lemma_exceptions,
        negators=negators,
    )
