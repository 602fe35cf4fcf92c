"""gesturec: compile text into speech-synchronized, affect-modulated robot
gesture scripts.

The pipeline splits and tags the text, estimates per-word speech timing,
attaches valence/arousal/dominance affect and image-schema annotations to
the content words, selects one gesture per sentence, and synthesizes joint
trajectories for a parameterized upper-body robot model.
"""

from .pipeline import PipelineConfig, load_resources, run_explain, run_pipeline

__version__ = "0.1.0"

__all__ = [
    "PipelineConfig",
    "load_resources",
    "run_explain",
    "run_pipeline",
    "__version__",
]
