from __future__ import annotations

import json
import math
import random

import numpy as np
import pytest

from gesturec.robot import (
    ARM_JOINTS,
    ArmModel,
    DegenerateModelError,
    JointLimits,
    RobotModelError,
    forward_arm,
    gesture_to_target,
    load_robot_model,
    solve_arm,
)

WIDE_LIMITS = {
    "shoulder_pitch": JointLimits(-math.pi, math.pi),
    "shoulder_roll": JointLimits(-math.pi, math.pi),
    "elbow_pitch": JointLimits(0.0, math.pi),
}
REST = {"shoulder_pitch": 0.0, "shoulder_roll": 0.0, "elbow_pitch": 0.0}


def _arm(l1: float = 1.0, l2: float = 1.0, sign: float = 1.0) -> ArmModel:
    return ArmModel(
        upper_arm_len=l1,
        forearm_len=l2,
        shoulder_pos=(0.0, 0.0, 0.0),
        limits=WIDE_LIMITS,
        rest_pose=REST,
        lateral_sign=sign,
    )


def test_elbow_right_angle_at_sqrt2():
    # law of cosines: d^2 = 2 means cos(elbow) = 0 for unit links
    arm = _arm()
    solution = solve_arm(arm, (0.0, -1.0, 1.0))
    assert solution.elbow_pitch == pytest.approx(math.pi / 2, abs=1e-12)
    assert not solution.reach_clamped
    assert not solution.limit_clamped


def test_full_extension_clamps_to_98_percent():
    arm = _arm()
    solution = solve_arm(arm, (0.0, 0.0, 2.0))
    assert solution.reach_clamped
    # clamped distance 1.96: cos(elbow) = (1.96^2 - 2) / 2
    expected = math.acos((1.96**2 - 2.0) / 2.0)
    assert solution.elbow_pitch == pytest.approx(expected, abs=1e-12)
    assert solution.elbow_pitch < 0.45  # nearly straight


def test_far_target_radially_clamped_before_ik():
    arm = _arm()
    solution = solve_arm(arm, (0.0, 0.0, 3.0))
    assert solution.reach_clamped
    assert np.linalg.norm(solution.target) == pytest.approx(1.96, abs=1e-12)
    fk = forward_arm(arm, *solution.angles)
    assert np.linalg.norm(fk - np.array(solution.target)) < 1e-6


def test_straight_down_target_closes_with_bent_elbow():
    arm = _arm(0.25, 0.25)
    target = np.array([0.0, -0.4, 0.0])
    solution = solve_arm(arm, target)
    # law of cosines: cos(elbow) = (0.4^2 - 2 * 0.25^2) / (2 * 0.25^2) = 0.28
    assert solution.elbow_pitch == pytest.approx(math.acos(0.28), abs=1e-12)
    fk = forward_arm(arm, *solution.angles)
    assert np.linalg.norm(fk - target) < 1e-9


@pytest.mark.parametrize("sign", [1.0, -1.0])
def test_fk_ik_closure_random_targets(sign):
    arm = ArmModel(
        upper_arm_len=0.25,
        forearm_len=0.25,
        shoulder_pos=(sign * 0.15, 0.0, 0.0),
        limits=WIDE_LIMITS,
        rest_pose=REST,
        lateral_sign=sign,
    )
    rng = random.Random(11)
    checked = 0
    for _ in range(300):
        direction = np.array([rng.gauss(0, 1) for _ in range(3)])
        direction /= np.linalg.norm(direction)
        d = rng.uniform(0.02, 0.98 * arm.reach)
        target = np.array(arm.shoulder_pos) + d * direction
        solution = solve_arm(arm, target)
        assert not solution.reach_clamped
        if solution.limit_clamped:
            continue
        fk = forward_arm(arm, *solution.angles)
        assert np.linalg.norm(fk - target) < 1e-6
        checked += 1
    assert checked > 200


def test_joint_limit_clamp_is_flagged():
    arm = ArmModel(
        upper_arm_len=1.0,
        forearm_len=1.0,
        shoulder_pos=(0.0, 0.0, 0.0),
        limits={
            "shoulder_pitch": JointLimits(-0.1, 0.1),
            "shoulder_roll": JointLimits(-0.1, 0.1),
            "elbow_pitch": JointLimits(0.0, 2.8),
        },
        rest_pose=REST,
        lateral_sign=1.0,
    )
    solution = solve_arm(arm, (0.0, 0.0, 1.5))  # needs a big forward pitch
    assert solution.limit_clamped
    assert solution.shoulder_pitch == 0.1


def test_degenerate_model():
    arm = ArmModel(
        upper_arm_len=0.0,
        forearm_len=0.0,
        shoulder_pos=(0.0, 0.0, 0.0),
        limits=WIDE_LIMITS,
        rest_pose=REST,
        lateral_sign=1.0,
    )
    with pytest.raises(DegenerateModelError):
        solve_arm(arm, (0.1, 0.1, 0.1))


def test_target_at_shoulder_folds_arm():
    arm = _arm()
    solution = solve_arm(arm, (0.0, 0.0, 0.0))
    assert solution.elbow_pitch == pytest.approx(math.pi, abs=1e-9)


def test_gesture_box_mapping():
    arm = ArmModel(
        upper_arm_len=0.25,
        forearm_len=0.25,
        shoulder_pos=(0.15, 0.0, 0.0),
        limits=WIDE_LIMITS,
        rest_pose=REST,
        lateral_sign=1.0,
    )
    # cube center sits half a reach forward of the shoulder
    assert gesture_to_target(arm, (0.0, 0.0, 0.0)) == (0.15, 0.0, 0.25)
    # half-extent is 0.8 * reach / 2 = 0.2
    assert gesture_to_target(arm, (1.0, 1.0, 1.0)) == pytest.approx((0.35, 0.2, 0.45), abs=1e-15)
    assert gesture_to_target(arm, (-1.0, -1.0, -1.0)) == pytest.approx((-0.05, -0.2, 0.05), abs=1e-15)


def test_load_bundled_model(resources):
    model = resources.robot
    assert set(model.arms) == {"left", "right"}
    assert model.joint_names == (
        "left_shoulder_pitch", "left_shoulder_roll", "left_elbow_pitch",
        "right_shoulder_pitch", "right_shoulder_roll", "right_elbow_pitch",
    )
    for side, arm in model.arms.items():
        assert arm.reach == 0.5
        for joint in ARM_JOINTS:
            limits = arm.limits[joint]
            assert limits.lower < limits.upper
            assert limits.lower <= arm.rest_pose[joint] <= limits.upper
    assert model.arms["left"].lateral_sign == -1.0
    assert model.arms["right"].lateral_sign == 1.0


def test_model_loader_rejects_bad_documents():
    with pytest.raises(RobotModelError):
        load_robot_model("nonsense")
    with pytest.raises(RobotModelError):
        load_robot_model('{"arms": {"left": {}}}')
    good = {
        "arms": {
            side: {
                "upper_arm_len": 0.25,
                "forearm_len": 0.25,
                "shoulder_pos": [0.0, 0.0, 0.0],
                "joints": {j: {"min": -1.0, "max": 1.0} for j in ARM_JOINTS},
                "rest_pose": {j: 0.0 for j in ARM_JOINTS},
            }
            for side in ("left", "right")
        }
    }
    bad = json.loads(json.dumps(good))
    bad["arms"]["left"]["upper_arm_len"] = 0.0
    with pytest.raises(RobotModelError):
        load_robot_model(json.dumps(bad))
