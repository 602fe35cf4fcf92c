"""Keyframe shape templates, one per image schema, plus the rhythmic beat.

Shapes are authored in a normalized gesture cube: x runs to the performer's
right, y up, z forward, every coordinate in [-1, 1]; hand aperture runs from
0 (closed fist) to 1 (fully open). Wrists not taking part in a one-handed
shape hold the rest position. Scaling and retargeting to a physical arm
happen downstream.
"""

from __future__ import annotations

from dataclasses import dataclass

from .schemas import SCHEMA_INVENTORY

LEFT = "LEFT"
RIGHT = "RIGHT"
BOTH = "BOTH"

BEAT = "BEAT"

# Where the wrists sit when idle, in gesture-space coordinates.
REST_WRIST: dict[str, tuple[float, float, float]] = {
    LEFT: (-0.4, -0.7, 0.3),
    RIGHT: (0.4, -0.7, 0.3),
}

Vec3 = tuple[float, float, float]


@dataclass(frozen=True)
class Keyframe:
    fraction: float
    left_wrist: Vec3
    right_wrist: Vec3
    aperture: float

    def __post_init__(self) -> None:
        if not 0.0 <= self.fraction <= 1.0:
            raise ValueError(f"fraction out of [0, 1]: {self.fraction!r}")
        if not 0.0 <= self.aperture <= 1.0:
            raise ValueError(f"aperture out of [0, 1]: {self.aperture!r}")
        for point in (self.left_wrist, self.right_wrist):
            if len(point) != 3 or any(not -1.0 <= c <= 1.0 for c in point):
                raise ValueError(f"wrist point outside the gesture cube: {point!r}")


@dataclass(frozen=True)
class GestureTemplate:
    name: str
    handedness: str
    keyframes: tuple[Keyframe, ...]
    description: str

    def __post_init__(self) -> None:
        if self.handedness not in (LEFT, RIGHT, BOTH):
            raise ValueError(f"bad handedness: {self.handedness!r}")
        if len(self.keyframes) < 2:
            raise ValueError("a template needs at least two keyframes")
        fractions = [kf.fraction for kf in self.keyframes]
        if fractions[0] != 0.0 or fractions[-1] != 1.0:
            raise ValueError("keyframes must start at fraction 0 and end at 1")
        if any(b <= a for a, b in zip(fractions, fractions[1:])):
            raise ValueError("keyframe fractions must strictly increase")


_L_REST = REST_WRIST[LEFT]
_R_REST = REST_WRIST[RIGHT]


def _right_handed(name: str, description: str, frames: list[tuple[float, Vec3, float]]) -> GestureTemplate:
    keyframes = tuple(
        Keyframe(fraction=f, left_wrist=_L_REST, right_wrist=p, aperture=a)
        for f, p, a in frames
    )
    return GestureTemplate(name=name, handedness=RIGHT, keyframes=keyframes, description=description)


def _two_handed(name: str, description: str, frames: list[tuple[float, Vec3, Vec3, float]]) -> GestureTemplate:
    keyframes = tuple(
        Keyframe(fraction=f, left_wrist=l, right_wrist=r, aperture=a)
        for f, l, r, a in frames
    )
    return GestureTemplate(name=name, handedness=BOTH, keyframes=keyframes, description=description)


TEMPLATES: dict[str, GestureTemplate] = {
    "CONTAINER": _two_handed(
        "CONTAINER",
        "both hands trace the walls and base of a bounded volume",
        [
            (0.0, (-0.30, 0.25, 0.45), (0.30, 0.25, 0.45), 0.7),
            (0.35, (-0.30, -0.15, 0.45), (0.30, -0.15, 0.45), 0.7),
            (0.70, (-0.12, -0.15, 0.45), (0.12, -0.15, 0.45), 0.7),
            (1.0, (-0.12, 0.22, 0.45), (0.12, 0.22, 0.45), 0.7),
        ],
    ),
    "OBJECT": _two_handed(
        "OBJECT",
        "hands converge as if presenting a graspable entity",
        [
            (0.0, (-0.35, -0.10, 0.40), (0.35, -0.10, 0.40), 0.9),
            (0.5, (-0.15, -0.05, 0.50), (0.15, -0.05, 0.50), 0.5),
            (1.0, (-0.12, 0.00, 0.50), (0.12, 0.00, 0.50), 0.3),
        ],
    ),
    "PATH": _right_handed(
        "PATH",
        "one hand sweeps a lateral arc tracing a route",
        [
            (0.0, (-0.20, 0.00, 0.50), 0.8),
            (0.5, (0.10, 0.10, 0.55), 0.8),
            (1.0, (0.45, 0.00, 0.50), 0.8),
        ],
    ),
    "SOURCE_PATH_GOAL": _right_handed(
        "SOURCE_PATH_GOAL",
        "one hand departs near the torso and lands on a distant endpoint",
        [
            (0.0, (0.10, -0.20, 0.20), 0.6),
            (0.4, (0.20, 0.15, 0.50), 0.8),
            (0.8, (0.30, 0.05, 0.75), 0.8),
            (1.0, (0.30, -0.05, 0.80), 0.4),
        ],
    ),
    "UP_DOWN": _right_handed(
        "UP_DOWN",
        "one hand rises along the vertical axis, low to high",
        [
            (0.0, (0.30, -0.45, 0.45), 0.7),
            (0.5, (0.35, 0.05, 0.50), 0.7),
            (1.0, (0.30, 0.55, 0.45), 0.7),
        ],
    ),
    "NEAR_FAR": _right_handed(
        "NEAR_FAR",
        "one hand moves from close to the torso toward far space",
        [
            (0.0, (0.20, 0.00, 0.15), 0.6),
            (0.5, (0.25, 0.05, 0.50), 0.8),
            (1.0, (0.30, 0.05, 0.85), 0.9),
        ],
    ),
    "FORCE": _two_handed(
        "FORCE",
        "both fists draw back and drive forward against resistance",
        [
            (0.0, (-0.25, -0.05, 0.25), (0.25, -0.05, 0.25), 0.2),
            (0.3, (-0.30, 0.00, 0.15), (0.30, 0.00, 0.15), 0.1),
            (1.0, (-0.20, 0.05, 0.75), (0.20, 0.05, 0.75), 0.1),
        ],
    ),
    "BALANCE": _two_handed(
        "BALANCE",
        "hands alternate like scale pans and settle level",
        [
            (0.0, (-0.40, 0.15, 0.45), (0.40, -0.15, 0.45), 0.8),
            (0.5, (-0.40, -0.15, 0.45), (0.40, 0.15, 0.45), 0.8),
            (1.0, (-0.40, 0.00, 0.45), (0.40, 0.00, 0.45), 0.8),
        ],
    ),
    "CYCLE": _right_handed(
        "CYCLE",
        "one hand traces a closed frontal circle",
        [
            (0.0, (0.30, 0.25, 0.50), 0.7),
            (0.25, (0.50, 0.05, 0.50), 0.7),
            (0.5, (0.30, -0.15, 0.50), 0.7),
            (0.75, (0.10, 0.05, 0.50), 0.7),
            (1.0, (0.30, 0.25, 0.50), 0.7),
        ],
    ),
    "SCALE": _two_handed(
        "SCALE",
        "hands spread apart vertically to show growing extent",
        [
            (0.0, (-0.15, -0.05, 0.45), (0.15, 0.05, 0.45), 0.5),
            (0.5, (-0.18, -0.20, 0.45), (0.18, 0.25, 0.45), 0.7),
            (1.0, (-0.20, -0.35, 0.45), (0.20, 0.45, 0.45), 0.9),
        ],
    ),
}

BEAT_TEMPLATE = _right_handed(
    BEAT,
    "a small rhythmic downbeat of one hand",
    [
        (0.0, (0.35, -0.20, 0.40), 0.6),
        (0.45, (0.38, -0.45, 0.45), 0.6),
        (1.0, (0.35, -0.30, 0.40), 0.6),
    ],
)

# The template table must cover the schema inventory exactly.
assert set(TEMPLATES) == set(SCHEMA_INVENTORY)


def lookup_template(schema: str) -> GestureTemplate:
    """Template for an inventory schema; total over the inventory."""
    try:
        return TEMPLATES[schema]
    except KeyError:
        raise ValueError(f"no template for schema {schema!r}") from None


def template_library_document() -> dict:
    """Inspectable document form of the whole shape library."""
    def template_doc(template: GestureTemplate) -> dict:
        return {
            "name": template.name,
            "handedness": template.handedness,
            "description": template.description,
            "keyframes": [
                {
                    "fraction": kf.fraction,
                    "left_wrist": list(kf.left_wrist),
                    "right_wrist": list(kf.right_wrist),
                    "aperture": kf.aperture,
                }
                for kf in template.keyframes
            ],
        }

    return {
        "rest_wrist": {hand: list(point) for hand, point in REST_WRIST.items()},
        "templates": [template_doc(TEMPLATES[tag]) for tag in SCHEMA_INVENTORY],
        "beat": template_doc(BEAT_TEMPLATE),
    }
