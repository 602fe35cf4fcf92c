"""Phase scheduling, template scaling, retargeting, and trajectory sampling.

A selected gesture becomes preparation, stroke, and retraction phases hung on
the anchor word's spoken interval, scaled template keyframes, per-keyframe
joint angles from the arm IK, and finally a time-sampled joint trajectory
with a minimum-jerk profile on every segment.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Sequence

from .planner import GestureParams
from .robot import RobotModel, gesture_to_target, solve_arm
from .templates import LEFT, RIGHT, REST_WRIST, GestureTemplate, Keyframe
from .timing import WordTiming

PREP_RATIO = 0.4
RETRACT_RATIO = 0.6
STROKE_MIN_S = 0.2
STROKE_MAX_S = 1.2
PREP_MIN_S = 0.05


class InvalidRateError(ValueError):
    """Raised when a non-positive sample rate is requested."""


@dataclass(frozen=True)
class Phase:
    start_s: float
    end_s: float

    def __post_init__(self) -> None:
        if self.end_s < self.start_s:
            raise ValueError("phase must not end before it starts")

    @property
    def duration_s(self) -> float:
        return self.end_s - self.start_s


@dataclass(frozen=True)
class PhasedPlan:
    prep: Phase
    stroke: Phase
    retract: Phase

    def __post_init__(self) -> None:
        if self.prep.end_s != self.stroke.start_s or self.stroke.end_s != self.retract.start_s:
            raise ValueError("phases must chain without gaps")


@dataclass(frozen=True)
class PosedKeyframe:
    fraction: float
    angles: tuple[float, ...]
    reach_clamped: bool
    limit_clamped: bool


@dataclass(frozen=True)
class JointTrajectory:
    joints: tuple[str, ...]
    points: tuple[tuple[float, tuple[float, ...]], ...]

    def __post_init__(self) -> None:
        times = [t for t, _ in self.points]
        if any(b <= a for a, b in zip(times, times[1:])):
            raise ValueError("trajectory timestamps must strictly increase")


def schedule_phases(
    word: WordTiming,
    params: GestureParams,
    sentence_start_s: float,
    sentence_end_s: float,
    sentence_pause_s: float,
) -> PhasedPlan:
    """Hang prep/stroke/retract on the anchor word.

    The stroke starts exactly at the word start and lasts the word duration
    clamped into [0.2 s, 1.2 s], divided by the speed factor. Preparation
    takes 0.4 of the stroke and retraction 0.6. Preparation is compressed so
    it never starts before the sentence; the 0.05 s floor holds whenever that
    much room exists (it always does unless the anchor opens the sentence, in
    which case the sentence boundary wins and prep collapses). Retraction is
    truncated at sentence end plus the sentence pause.
    """
    stroke_start = word.start_s
    stroke_dur = min(max(word.duration_s, STROKE_MIN_S), STROKE_MAX_S) / params.speed_factor
    stroke_end = stroke_start + stroke_dur

    prep_start = max(sentence_start_s, stroke_start - PREP_RATIO * stroke_dur)
    retract_end = max(
        stroke_end, min(stroke_end + RETRACT_RATIO * stroke_dur, sentence_end_s + sentence_pause_s)
    )
    return PhasedPlan(
        prep=Phase(prep_start, stroke_start),
        stroke=Phase(stroke_start, stroke_end),
        retract=Phase(stroke_end, retract_end),
    )


def apply_params(template: GestureTemplate, params: GestureParams) -> tuple[Keyframe, ...]:
    """Scale keyframe wrists about the rest position and lift by the bias.

    Each wrist point moves to p + (amplitude - 1) * (p - rest) + bias on y,
    then clamps into the gesture cube. Amplitude 1 with zero bias leaves the
    points bit-for-bit unchanged.
    """
    scaled: list[Keyframe] = []
    for kf in template.keyframes:
        scaled.append(
            replace(
                kf,
                left_wrist=_scale_point(kf.left_wrist, REST_WRIST[LEFT], params),
                right_wrist=_scale_point(kf.right_wrist, REST_WRIST[RIGHT], params),
            )
        )
    return tuple(scaled)


def _scale_point(
    point: tuple[float, float, float],
    rest: tuple[float, float, float],
    params: GestureParams,
) -> tuple[float, float, float]:
    gain = params.amplitude_factor - 1.0
    moved = (
        point[0] + gain * (point[0] - rest[0]),
        point[1] + gain * (point[1] - rest[1]) + params.vertical_bias,
        point[2] + gain * (point[2] - rest[2]),
    )
    return tuple(min(1.0, max(-1.0, c)) for c in moved)


def retarget_keyframes(
    keyframes: Sequence[Keyframe], model: RobotModel
) -> list[PosedKeyframe]:
    """Joint angles for both arms at every keyframe, with clamp flags."""
    posed: list[PosedKeyframe] = []
    for kf in keyframes:
        left = solve_arm(model.arms["left"], gesture_to_target(model.arms["left"], kf.left_wrist))
        right = solve_arm(model.arms["right"], gesture_to_target(model.arms["right"], kf.right_wrist))
        posed.append(
            PosedKeyframe(
                fraction=kf.fraction,
                angles=left.angles + right.angles,
                reach_clamped=left.reach_clamped or right.reach_clamped,
                limit_clamped=left.limit_clamped or right.limit_clamped,
            )
        )
    return posed


def minjerk(q0: float, q1: float, s: float) -> float:
    """Minimum-jerk blend between q0 and q1 with exact endpoints."""
    if s <= 0.0:
        return q0
    if s >= 1.0:
        return q1
    blend = s * s * s * (10.0 + s * (-15.0 + 6.0 * s))
    return q0 + (q1 - q0) * blend


def sample_trajectory(
    posed: Sequence[PosedKeyframe],
    model: RobotModel,
    plan: PhasedPlan,
    sample_rate_hz: float,
) -> JointTrajectory:
    """Sample all joints over prep, stroke, and retract.

    Keyframe fractions map onto the stroke interval; preparation blends the
    rest pose into the first keyframe and retraction blends the last keyframe
    back to rest, each with the same minimum-jerk profile. Samples fall on the
    requested rate grid of each segment plus the exact segment endpoints;
    zero-length segments are skipped.
    """
    if sample_rate_hz <= 0.0:
        raise InvalidRateError(f"sample rate must be positive: {sample_rate_hz!r}")
    if len(posed) < 2:
        raise ValueError("need at least two posed keyframes")

    rest = model.rest_angles
    segments: list[tuple[float, float, tuple[float, ...], tuple[float, ...]]] = []
    if plan.prep.duration_s > 0.0:
        segments.append((plan.prep.start_s, plan.prep.end_s, rest, posed[0].angles))
    stroke_dur = plan.stroke.duration_s
    for a, b in zip(posed, posed[1:]):
        t0 = plan.stroke.start_s + a.fraction * stroke_dur
        t1 = plan.stroke.end_s if b.fraction == 1.0 else plan.stroke.start_s + b.fraction * stroke_dur
        segments.append((t0, t1, a.angles, b.angles))
    if plan.retract.duration_s > 0.0:
        segments.append((plan.retract.start_s, plan.retract.end_s, posed[-1].angles, rest))

    points: list[tuple[float, tuple[float, ...]]] = []
    for t0, t1, q0, q1 in segments:
        if t1 <= t0:
            continue
        span = t1 - t0
        seg_points: list[tuple[float, tuple[float, ...]]] = []
        k = 0
        while True:
            t = t0 + k / sample_rate_hz
            if t >= t1:
                break
            s = (t - t0) / span
            seg_points.append((t, tuple(minjerk(a, b, s) for a, b in zip(q0, q1))))
            k += 1
        seg_points.append((t1, q1))
        if points and seg_points and seg_points[0][0] <= points[-1][0]:
            seg_points = seg_points[1:]  # shared boundary with the previous segment
        points.extend(seg_points)

    return JointTrajectory(joints=model.joint_names, points=tuple(points))
