"""Bundled demonstration resources used when no paths are supplied."""

from __future__ import annotations

from importlib import resources

VAD_LEXICON_FILE = "vad_lexicon.tsv"
SCHEMA_LEXICON_FILE = "schema_lexicon.json"
POS_RESOURCES_FILE = "pos_resources.json"
ROBOT_MODEL_FILE = "robot_model.json"


def read_default(name: str) -> str:
    return resources.files("gesturec").joinpath("data").joinpath(name).read_text(encoding="utf-8")
