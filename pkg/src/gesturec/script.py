"""Gesture script and trace documents plus canonical serialization.

Scripts are emitted with a fixed key order and fixed 6-decimal float
formatting so identical inputs always produce byte-identical files. The
explain trace keeps full float precision (repr) because its score breakdowns
must sum exactly to the reported scores.
"""

from __future__ import annotations

import json
from typing import TYPE_CHECKING, Sequence

from .affect import VadTriple
from .planner import GestureCandidate, RankerWeights, score_terms

if TYPE_CHECKING:
    from .pipeline import SentenceAnalysis

SCRIPT_VERSION = "1.0"

TRACE_STAGES = (
    "tokens",
    "content_words",
    "timing",
    "affect",
    "schemas",
    "candidates",
    "selection",
    "phases",
)


def build_script_document(text: str, analyses: Sequence["SentenceAnalysis"]) -> dict:
    """The complete per-sentence gesture script as a plain document."""
    sentences = []
    for analysis in analyses:
        affect_by_index = {a.token_index: a for a in analysis.affects}
        schema_by_index = {a.token_index: a for a in analysis.annotations}
        words = []
        for token, timing in zip(analysis.sentence.tokens, analysis.timings):
            affect = affect_by_index.get(token.index)
            annotation = schema_by_index.get(token.index)
            words.append(
                {
                    "surface": token.surface,
                    "lemma": token.lemma,
                    "pos": token.pos,
                    "start_s": timing.start_s,
                    "duration_s": timing.duration_s,
                    "vad": _vad_doc(affect.vad) if affect else None,
                    "schema": annotation.schema if annotation else None,
                }
            )
        sentences.append(
            {
                "index": analysis.sentence.index,
                "text": analysis.sentence.text,
                "words": words,
                "gesture": _gesture_doc(analysis),
            }
        )
    return {"version": SCRIPT_VERSION, "text": text, "sentences": sentences}


def _vad_doc(vad: VadTriple) -> dict:
    return {"v": vad.valence, "a": vad.arousal, "d": vad.dominance}


def _gesture_doc(analysis: "SentenceAnalysis") -> dict | None:
    selected = analysis.selected
    if selected is None:
        return None
    plan = analysis.phases
    trajectory = analysis.trajectory
    return {
        "kind": selected.kind,
        "schema": selected.schema,
        "word_index": selected.token_index,
        "params": {
            "speed_factor": analysis.params.speed_factor,
            "amplitude_factor": analysis.params.amplitude_factor,
            "vertical_bias": analysis.params.vertical_bias,
        },
        "phases": {
            "prep": {"start_s": plan.prep.start_s, "end_s": plan.prep.end_s},
            "stroke": {"start_s": plan.stroke.start_s, "end_s": plan.stroke.end_s},
            "retract": {"start_s": plan.retract.start_s, "end_s": plan.retract.end_s},
        },
        "trajectory": {
            "joints": list(trajectory.joints),
            "points": [
                {"t_s": t, "positions": list(angles)} for t, angles in trajectory.points
            ],
        },
    }


def build_trace_document(
    text: str, analyses: Sequence["SentenceAnalysis"], weights: RankerWeights
) -> dict:
    """Per-sentence intermediate outputs of every stage, eight per sentence."""
    sentences = []
    for analysis in analyses:
        tokens = analysis.sentence.tokens
        stages = [
            {
                "stage": "tokens",
                "tokens": [
                    {
                        "index": t.index,
                        "surface": t.surface,
                        "lemma": t.lemma,
                        "pos": t.pos,
                        "is_content": t.is_content,
                    }
                    for t in tokens
                ],
            },
            {
                "stage": "content_words",
                "words": [
                    {"index": t.index, "lemma": t.lemma} for t in analysis.content_tokens
                ],
            },
            {
                "stage": "timing",
                "words": [
                    {"index": t.index, "start_s": w.start_s, "duration_s": w.duration_s}
                    for t, w in zip(tokens, analysis.timings)
                ],
            },
            {
                "stage": "affect",
                "sentence_vad": _vad_doc(analysis.sentence_vad),
                "words": [
                    {"index": a.token_index, "vad": _vad_doc(a.vad), "source": a.source}
                    for a in analysis.affects
                ],
            },
            {
                "stage": "schemas",
                "annotations": [
                    {"index": a.token_index, "schema": a.schema, "weight": a.weight}
                    for a in analysis.annotations
                ],
            },
            {
                "stage": "candidates",
                "candidates": [_candidate_doc(c, weights) for c in analysis.candidates],
            },
            {
                "stage": "selection",
                "selected": _selection_doc(analysis.selected, weights),
                "params": (
                    None
                    if analysis.params is None
                    else {
                        "speed_factor": analysis.params.speed_factor,
                        "amplitude_factor": analysis.params.amplitude_factor,
                        "vertical_bias": analysis.params.vertical_bias,
                    }
                ),
            },
            {
                "stage": "phases",
                "phases": (
                    None
                    if analysis.phases is None
                    else {
                        "prep": {
                            "start_s": analysis.phases.prep.start_s,
                            "end_s": analysis.phases.prep.end_s,
                        },
                        "stroke": {
                            "start_s": analysis.phases.stroke.start_s,
                            "end_s": analysis.phases.stroke.end_s,
                        },
                        "retract": {
                            "start_s": analysis.phases.retract.start_s,
                            "end_s": analysis.phases.retract.end_s,
                        },
                    }
                ),
            },
        ]
        sentences.append(
            {"index": analysis.sentence.index, "text": analysis.sentence.text, "stages": stages}
        )
    return {"version": SCRIPT_VERSION, "text": text, "sentences": sentences}


def _candidate_doc(candidate: GestureCandidate, weights: RankerWeights) -> dict:
    terms = score_terms(candidate, weights)
    return {
        "index": candidate.token_index,
        "kind": candidate.kind,
        "schema": candidate.schema,
        "schema_weight": candidate.schema_weight,
        "pos": candidate.pos,
        "vad": _vad_doc(candidate.vad),
        "extremity": candidate.vad.extremity(),
        "terms": terms,
        "score": candidate.score,
    }


def _selection_doc(selected: GestureCandidate | None, weights: RankerWeights) -> dict | None:
    if selected is None:
        return None
    return _candidate_doc(selected, weights)


def serialize_document(doc: dict, floats: str = "fixed") -> str:
    """Canonical text form: insertion key order, deterministic floats.

    floats="fixed" renders every float with 6 fractional digits (scripts);
    floats="repr" keeps full shortest-roundtrip precision (traces).
    """
    if floats not in ("fixed", "repr"):
        raise ValueError(f"unknown float style: {floats!r}")
    out: list[str] = []
    _write_value(doc, out, 0, floats)
    out.append("\n")
    return "".join(out)


def _format_float(value: float, floats: str) -> str:
    if value == 0.0:
        value = 0.0  # normalize -0.0
    return format(value, ".6f") if floats == "fixed" else repr(value)


def _format_scalar(value: object, floats: str) -> str:
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return _format_float(value, floats)
    if isinstance(value, str):
        return json.dumps(value)
    raise TypeError(f"cannot serialize {type(value).__name__}")


def _write_value(value: object, out: list[str], indent: int, floats: str) -> None:
    pad = "  " * indent
    inner = "  " * (indent + 1)
    if isinstance(value, dict):
        if not value:
            out.append("{}")
            return
        out.append("{\n")
        for i, (key, item) in enumerate(value.items()):
            out.append(f"{inner}{json.dumps(str(key))}: ")
            _write_value(item, out, indent + 1, floats)
            out.append(",\n" if i < len(value) - 1 else "\n")
        out.append(pad + "}")
    elif isinstance(value, (list, tuple)):
        items = list(value)
        if not items:
            out.append("[]")
            return
        if all(not isinstance(item, (dict, list, tuple)) for item in items):
            out.append("[" + ", ".join(_format_scalar(item, floats) for item in items) + "]")
            return
        out.append("[\n")
        for i, item in enumerate(items):
            out.append(inner)
            _write_value(item, out, indent + 1, floats)
            out.append(",\n" if i < len(items) - 1 else "\n")
        out.append(pad + "]")
    else:
        out.append(_format_scalar(value, floats))


def trajectory_csv(analyses: Sequence["SentenceAnalysis"], joint_names: Sequence[str]) -> str:
    """All gesture trajectory samples in sentence order, 6-decimal fixed."""
    lines = ["t_s," + ",".join(joint_names)]
    for analysis in analyses:
        if analysis.trajectory is None:
            continue
        for t, angles in analysis.trajectory.points:
            lines.append(
                format(t, ".6f") + "," + ",".join(format(a, ".6f") for a in angles)
            )
    return "\n".join(lines) + "\n"
