from __future__ import annotations

import pytest

from gesturec.schemas import SCHEMA_INVENTORY
from gesturec.templates import (
    BEAT_TEMPLATE,
    BOTH,
    RIGHT,
    REST_WRIST,
    TEMPLATES,
    lookup_template,
    template_library_document,
)


def test_exactly_one_template_per_inventory_schema():
    assert set(TEMPLATES) == set(SCHEMA_INVENTORY)
    for tag in SCHEMA_INVENTORY:
        assert lookup_template(tag).name == tag


def test_lookup_rejects_unknown_schema():
    with pytest.raises(ValueError):
        lookup_template("FLYING")


@pytest.mark.parametrize("template", list(TEMPLATES.values()) + [BEAT_TEMPLATE])
def test_keyframe_invariants(template):
    fractions = [kf.fraction for kf in template.keyframes]
    assert fractions[0] == 0.0
    assert fractions[-1] == 1.0
    assert all(b > a for a, b in zip(fractions, fractions[1:]))
    for kf in template.keyframes:
        for point in (kf.left_wrist, kf.right_wrist):
            assert all(-1.0 <= c <= 1.0 for c in point)
        assert 0.0 <= kf.aperture <= 1.0


def test_container_is_a_two_handed_box_trace():
    template = lookup_template("CONTAINER")
    assert template.handedness == BOTH
    assert len(template.keyframes) == 4
    # the two hands mirror each other laterally while tracing the volume
    for kf in template.keyframes:
        assert kf.left_wrist[0] == -kf.right_wrist[0]
        assert kf.left_wrist[1] == kf.right_wrist[1]


def test_up_down_sweeps_low_to_high():
    template = lookup_template("UP_DOWN")
    assert template.handedness == RIGHT
    heights = [kf.right_wrist[1] for kf in template.keyframes]
    assert heights[0] < 0.0 < heights[-1]
    assert all(b > a for a, b in zip(heights, heights[1:]))


def test_path_arcs_left_to_right():
    template = lookup_template("PATH")
    assert template.handedness == RIGHT
    lateral = [kf.right_wrist[0] for kf in template.keyframes]
    assert lateral[0] < 0.0 < lateral[-1]


def test_one_handed_templates_keep_left_wrist_at_rest():
    for template in list(TEMPLATES.values()) + [BEAT_TEMPLATE]:
        if template.handedness == RIGHT:
            assert all(kf.left_wrist == REST_WRIST["LEFT"] for kf in template.keyframes)


def test_library_document_covers_everything():
    doc = template_library_document()
    assert [t["name"] for t in doc["templates"]] == list(SCHEMA_INVENTORY)
    assert doc["beat"]["name"] == "BEAT"
    assert set(doc["rest_wrist"]) == {"LEFT", "RIGHT"}
    for template_doc in doc["templates"]:
        assert {"fraction", "left_wrist", "right_wrist", "aperture"} <= set(
            template_doc["keyframes"][0]
        )
