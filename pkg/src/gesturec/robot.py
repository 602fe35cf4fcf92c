"""Parameterized upper-body arm model with closed-form inverse kinematics.

Each arm is a 3-DOF chain in a torso frame with x to the robot's right, y up,
z forward: a 2-DOF shoulder gimbal (roll about the torso z axis applied after
pitch about the lateral x axis) plus an elbow hinge. The zero pose hangs the
arm straight down; positive pitch swings it forward, positive roll swings it
away from the body (both arms, via lateral mirroring), elbow 0 is straight
and positive angles bend the forearm forward.

The elbow comes from the law of cosines on the clamped shoulder-to-target
distance, the shoulder angles from the spherical direction of the target.
Targets beyond 98 percent of full reach (or inside the inner shell) are
radially clamped and flagged; angles outside joint limits are clamped and
flagged separately.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import IO, Mapping, Sequence

import numpy as np

ARM_JOINTS = ("shoulder_pitch", "shoulder_roll", "elbow_pitch")
ARM_SIDES = ("left", "right")

REACH_FRACTION = 0.98  # radial clamp at this fraction of full extension
BOX_FRACTION = 0.8  # gesture cube maps onto this fraction of reach, centered


class RobotModelError(Exception):
    """Raised for a structurally invalid robot model document."""


class DegenerateModelError(RobotModelError):
    """Raised when an arm has zero total length."""


@dataclass(frozen=True)
class JointLimits:
    lower: float
    upper: float

    def __post_init__(self) -> None:
        if not self.lower < self.upper:
            raise ValueError(f"joint limits must satisfy lower < upper: {self}")

    def clamp(self, value: float) -> float:
        return min(max(value, self.lower), self.upper)


@dataclass(frozen=True)
class ArmModel:
    upper_arm_len: float
    forearm_len: float
    shoulder_pos: tuple[float, float, float]
    limits: Mapping[str, JointLimits]
    rest_pose: Mapping[str, float]
    lateral_sign: float  # +1 right arm, -1 left arm

    def __post_init__(self) -> None:
        if set(self.limits) != set(ARM_JOINTS) or set(self.rest_pose) != set(ARM_JOINTS):
            raise ValueError("limits and rest_pose must cover exactly the arm joints")
        for joint in ARM_JOINTS:
            rest = self.rest_pose[joint]
            lim = self.limits[joint]
            if not lim.lower <= rest <= lim.upper:
                raise ValueError(f"rest pose for {joint} outside limits")

    @property
    def reach(self) -> float:
        return self.upper_arm_len + self.forearm_len


@dataclass(frozen=True)
class RobotModel:
    name: str
    arms: Mapping[str, ArmModel]

    @property
    def joint_names(self) -> tuple[str, ...]:
        return tuple(f"{side}_{joint}" for side in ARM_SIDES for joint in ARM_JOINTS)

    @property
    def rest_angles(self) -> tuple[float, ...]:
        return tuple(
            self.arms[side].rest_pose[joint] for side in ARM_SIDES for joint in ARM_JOINTS
        )


@dataclass(frozen=True)
class ArmSolution:
    shoulder_pitch: float
    shoulder_roll: float
    elbow_pitch: float
    reach_clamped: bool
    limit_clamped: bool
    target: tuple[float, float, float]  # the radially clamped Cartesian target

    @property
    def angles(self) -> tuple[float, float, float]:
        return (self.shoulder_pitch, self.shoulder_roll, self.elbow_pitch)


def load_robot_model(source: str | IO[str]) -> RobotModel:
    """Parse and validate the JSON robot model document."""
    text = source.read() if hasattr(source, "read") else source
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise RobotModelError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict) or not isinstance(doc.get("arms"), dict):
        raise RobotModelError('expected an object with an "arms" mapping')
    if set(doc["arms"]) != set(ARM_SIDES):
        raise RobotModelError('arms must be exactly "left" and "right"')
    arms: dict[str, ArmModel] = {}
    for side in ARM_SIDES:
        raw = doc["arms"][side]
        try:
            limits = {
                joint: JointLimits(float(raw["joints"][joint]["min"]), float(raw["joints"][joint]["max"]))
                for joint in ARM_JOINTS
            }
            rest = {joint: float(raw["rest_pose"][joint]) for joint in ARM_JOINTS}
            arm = ArmModel(
                upper_arm_len=float(raw["upper_arm_len"]),
                forearm_len=float(raw["forearm_len"]),
                shoulder_pos=tuple(float(c) for c in raw["shoulder_pos"]),
                limits=limits,
                rest_pose=rest,
                lateral_sign=-1.0 if side == "left" else 1.0,
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise RobotModelError(f"bad {side} arm definition: {exc}") from exc
        if arm.upper_arm_len <= 0.0 or arm.forearm_len <= 0.0:
            raise RobotModelError(f"{side} arm segment lengths must be positive")
        arms[side] = arm
    return RobotModel(name=str(doc.get("name", "robot")), arms=arms)


def gesture_to_target(arm: ArmModel, point: Sequence[float]) -> tuple[float, float, float]:
    """Map a gesture-cube point into the arm's Cartesian reach box.

    The box is centered at the arm's mid-reach point (half reach forward of
    the shoulder) with half-extent BOX_FRACTION * reach / 2 per axis.
    """
    half = BOX_FRACTION * arm.reach * 0.5
    sx, sy, sz = arm.shoulder_pos
    return (
        sx + half * point[0],
        sy + half * point[1],
        sz + 0.5 * arm.reach + half * point[2],
    )


def solve_arm(arm: ArmModel, target: Sequence[float]) -> ArmSolution:
    """Closed-form IK for one arm toward a Cartesian torso-frame target."""
    l1, l2 = arm.upper_arm_len, arm.forearm_len
    reach = l1 + l2
    if reach <= 0.0:
        raise DegenerateModelError("arm has zero total length")

    sx, sy, sz = arm.shoulder_pos
    # Canonical right-arm frame: mirror the lateral axis for the left arm.
    dx = arm.lateral_sign * (float(target[0]) - sx)
    dy = float(target[1]) - sy
    dz = float(target[2]) - sz
    d = math.sqrt(dx * dx + dy * dy + dz * dz)

    r_max = REACH_FRACTION * reach
    r_min = abs(l1 - l2)
    d_clamped = min(max(d, r_min), r_max)
    reach_clamped = d_clamped != d

    if d > 1e-12:
        ux, uy, uz = dx / d, dy / d, dz / d
    else:
        ux, uy, uz = 0.0, -1.0, 0.0  # direction is moot at the shoulder

    clamped_target = (
        sx + arm.lateral_sign * ux * d_clamped,
        sy + uy * d_clamped,
        sz + uz * d_clamped,
    )

    cos_elbow = (d_clamped * d_clamped - l1 * l1 - l2 * l2) / (2.0 * l1 * l2)
    cos_elbow = min(1.0, max(-1.0, cos_elbow))
    elbow = math.acos(cos_elbow)

    if d_clamped > 1e-12:
        # Direction of the canonical bent-arm wrist before shoulder rotation.
        ucy = -(l1 + l2 * cos_elbow) / d_clamped
        ucz = l2 * math.sin(elbow) / d_clamped
        m = math.hypot(ux, uy)
        if uy < 0.0:
            m = -m
        n = uz
        pitch = math.atan2(ucz, ucy) - math.atan2(n, m)
        if pitch > math.pi:
            pitch -= 2.0 * math.pi
        elif pitch < -math.pi:
            pitch += 2.0 * math.pi
        if abs(m) < 1e-12:
            roll = 0.0
        elif m > 0.0:
            roll = math.atan2(-ux, uy)
        else:
            roll = math.atan2(ux, -uy)
    else:
        pitch, roll = 0.0, 0.0  # fully folded onto the shoulder

    limit_clamped = False
    clamped: dict[str, float] = {}
    for joint, value in zip(ARM_JOINTS, (pitch, roll, elbow)):
        bounded = arm.limits[joint].clamp(value)
        if bounded != value:
            limit_clamped = True
        clamped[joint] = bounded

    return ArmSolution(
        shoulder_pitch=clamped["shoulder_pitch"],
        shoulder_roll=clamped["shoulder_roll"],
        elbow_pitch=clamped["elbow_pitch"],
        reach_clamped=reach_clamped,
        limit_clamped=limit_clamped,
        target=clamped_target,
    )


def _rot_x(angle: float) -> np.ndarray:
    c, s = math.cos(angle), math.sin(angle)
    return np.array([[1.0, 0.0, 0.0], [0.0, c, -s], [0.0, s, c]])


def _rot_z(angle: float) -> np.ndarray:
    c, s = math.cos(angle), math.sin(angle)
    return np.array([[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]])


def forward_arm(
    arm: ArmModel, shoulder_pitch: float, shoulder_roll: float, elbow_pitch: float
) -> np.ndarray:
    """Wrist position for given joint angles, built from the chain matrices."""
    shoulder_rot = _rot_z(shoulder_roll) @ _rot_x(-shoulder_pitch)
    upper = shoulder_rot @ np.array([0.0, -arm.upper_arm_len, 0.0])
    forearm = shoulder_rot @ (_rot_x(-elbow_pitch) @ np.array([0.0, -arm.forearm_len, 0.0]))
    wrist = upper + forearm
    return np.array(arm.shoulder_pos) + np.array(
        [arm.lateral_sign * wrist[0], wrist[1], wrist[2]]
    )
