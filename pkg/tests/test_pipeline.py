from __future__ import annotations

import pytest

from gesturec.pipeline import (
    PipelineConfig,
    PipelineConfigError,
    analyze_text,
    load_resources,
    run_explain,
    run_pipeline,
)
from gesturec.planner import RankerWeights
from gesturec.script import (
    TRACE_STAGES,
    build_script_document,
    build_trace_document,
    serialize_document,
    trajectory_csv,
)


def test_grab_the_box_end_to_end(config):
    doc = run_pipeline("Grab the box.", config)
    assert doc["version"] == "1.0"
    assert doc["text"] == "Grab the box."
    (sentence,) = doc["sentences"]
    assert [w["surface"] for w in sentence["words"]] == ["Grab", "the", "box", "."]
    gesture = sentence["gesture"]
    assert gesture["kind"] == "ICONIC"
    assert gesture["schema"] == "CONTAINER"
    assert sentence["words"][gesture["word_index"]]["surface"] == "box"
    assert gesture["phases"]["stroke"]["start_s"] == sentence["words"][2]["start_s"]


def test_word_records_carry_affect_and_schema_nullability(config):
    doc = run_pipeline("Grab the box.", config)
    words = doc["sentences"][0]["words"]
    by_surface = {w["surface"]: w for w in words}
    assert by_surface["the"]["vad"] is None  # function word
    assert by_surface["."]["vad"] is None
    assert by_surface["box"]["vad"] == {"v": 0.55, "a": 0.30, "d": 0.45}
    assert by_surface["box"]["schema"] == "CONTAINER"
    assert by_surface["Grab"]["schema"] is None
    assert by_surface["Grab"]["vad"] is not None  # sentence fallback


def test_empty_input_yields_empty_valid_script(config):
    doc = run_pipeline("", config)
    assert doc["sentences"] == []
    serialized = serialize_document(doc)
    assert '"sentences": []' in serialized


def test_contentless_sentence_yields_no_gesture(config):
    doc = run_pipeline("...", config)
    (sentence,) = doc["sentences"]
    assert sentence["gesture"] is None


def test_beat_fallback_for_schemaless_content(config):
    doc = run_pipeline("I am happy.", config)
    (sentence,) = doc["sentences"]
    gesture = sentence["gesture"]
    assert gesture["kind"] == "BEAT"
    assert gesture["schema"] is None
    # the fallback mean equals the only lexicon hit, so every content word
    # ties on extremity and the earliest one anchors the beat
    assert sentence["words"][gesture["word_index"]]["surface"] == "am"


def test_beat_fallback_prefers_extreme_affect(config):
    # calm/friend/happy all hit the affect lexicon, none the schema lexicon;
    # happy has the largest distance from neutral
    doc = run_pipeline("The calm friend is happy.", config)
    (sentence,) = doc["sentences"]
    gesture = sentence["gesture"]
    assert gesture["kind"] == "BEAT"
    assert sentence["words"][gesture["word_index"]]["surface"] == "happy"


def test_iconic_schema_non_null_invariant(config):
    doc = run_pipeline("Grab the box. I am happy. Of the and.", config)
    for sentence in doc["sentences"]:
        gesture = sentence["gesture"]
        if gesture is None:
            continue
        assert (gesture["schema"] is not None) == (gesture["kind"] == "ICONIC")


def test_trace_has_eight_stages_per_sentence(config):
    trace = run_explain("Grab the box. I am happy!", config)
    for sentence in trace["sentences"]:
        assert tuple(stage["stage"] for stage in sentence["stages"]) == TRACE_STAGES


def test_trace_breakdown_sums_to_score(config):
    trace = run_explain("Push the box up the road.", config)
    found = 0
    for sentence in trace["sentences"]:
        candidates_stage = sentence["stages"][5]
        assert candidates_stage["stage"] == "candidates"
        for candidate in candidates_stage["candidates"]:
            total = sum(candidate["terms"].values())
            assert abs(total - candidate["score"]) < 1e-9
            found += 1
    assert found >= 2


def test_trace_selection_matches_a_candidate(config):
    trace = run_explain("Push the box.", config)
    (sentence,) = trace["sentences"]
    selection = sentence["stages"][6]
    assert selection["stage"] == "selection"
    selected = selection["selected"]
    candidate_indices = [c["index"] for c in sentence["stages"][5]["candidates"]]
    assert selected["index"] in candidate_indices


def test_determinism_of_script_and_trace(config):
    text = "Grab the box. Push it far away! The storm grew."
    first = serialize_document(run_pipeline(text, config), floats="fixed")
    second = serialize_document(run_pipeline(text, config), floats="fixed")
    assert first == second
    trace_a = serialize_document(run_explain(text, config), floats="repr")
    trace_b = serialize_document(run_explain(text, config), floats="repr")
    assert trace_a == trace_b


def test_missing_resource_path_is_config_error():
    cfg = PipelineConfig(vad_lexicon_path="/nonexistent/vad.tsv")
    with pytest.raises(PipelineConfigError):
        load_resources(cfg)


def test_invalid_weights_is_config_error():
    cfg = PipelineConfig(weights=RankerWeights(-1.0, 0.3, 0.2))
    with pytest.raises(PipelineConfigError):
        load_resources(cfg)


def test_invalid_sample_rate_is_config_error():
    cfg = PipelineConfig(sample_rate_hz=0.0)
    with pytest.raises(PipelineConfigError):
        load_resources(cfg)


def test_csv_export_shape(config, resources):
    analyses = analyze_text("Grab the box.", resources, config)
    csv_text = trajectory_csv(analyses, resources.robot.joint_names)
    lines = csv_text.strip().splitlines()
    assert lines[0] == "t_s," + ",".join(resources.robot.joint_names)
    assert len(lines) > 10
    first = lines[1].split(",")
    assert len(first) == 7
    float(first[0])


def test_csv_export_empty_when_no_gestures(config, resources):
    analyses = analyze_text("...", resources, config)
    csv_text = trajectory_csv(analyses, resources.robot.joint_names)
    assert csv_text.strip().splitlines() == ["t_s," + ",".join(resources.robot.joint_names)]


def test_serializer_rejects_unknown_style(config):
    with pytest.raises(ValueError):
        serialize_document({}, floats="funky")


def test_script_document_builds_without_resources_reload(config, resources):
    analyses = analyze_text("Grab the box.", resources, config)
    doc = build_script_document("Grab the box.", analyses)
    trace = build_trace_document("Grab the box.", analyses, config.weights)
    assert doc["sentences"][0]["gesture"]["kind"] == "ICONIC"
    assert len(trace["sentences"][0]["stages"]) == 8
