"""End-to-end orchestration: resources in, gesture script (and trace) out.

Every stage is deterministic, so identical text, resource files, and
configuration yield byte-identical outputs. All resources are loaded and
validated before any text is processed.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from pathlib import Path

from . import defaults, script as script_mod
from .affect import VadTriple, WordAffect, assign_affect, sentence_sentiment
from .lexicons import (
    LexiconError,
    PosResources,
    SchemaLexicon,
    VadLexicon,
    load_pos_resources,
    load_schema_lexicon,
    load_vad_lexicon,
)
from .planner import (
    GestureCandidate,
    GestureParams,
    RankerWeights,
    beat_fallback,
    extract_params,
    join_candidates,
    rank_and_select,
)
from .robot import RobotModel, RobotModelError, load_robot_model
from .schemas import SchemaAnnotation, map_schemas
from .synthesis import (
    JointTrajectory,
    PhasedPlan,
    apply_params,
    retarget_keyframes,
    sample_trajectory,
    schedule_phases,
)
from .templates import BEAT_TEMPLATE, lookup_template
from .textproc import (
    Sentence,
    Token,
    filter_words,
    split_sentences,
    tag_and_lemmatize,
    tokenize,
)
from .timing import TimingConfig, WordTiming, estimate_timing, spoken_bounds


class PipelineConfigError(Exception):
    """A resource or configuration problem detected before processing."""


class PipelineStageError(Exception):
    """A stage failure, labeled with the stage that raised it."""

    def __init__(self, stage: str, cause: Exception):
        super().__init__(f"stage {stage!r}: {cause}")
        self.stage = stage


@dataclass
class PipelineConfig:
    vad_lexicon_path: str | Path | None = None
    schema_lexicon_path: str | Path | None = None
    pos_resources_path: str | Path | None = None
    robot_model_path: str | Path | None = None
    timing: TimingConfig = field(default_factory=TimingConfig)
    weights: RankerWeights = field(default_factory=RankerWeights)
    sample_rate_hz: float = 50.0


@dataclass(frozen=True)
class Resources:
    vad: VadLexicon
    schemas: SchemaLexicon
    pos: PosResources
    robot: RobotModel


@dataclass
class SentenceAnalysis:
    """Everything the pipeline derived for one sentence."""

    sentence: Sentence
    timings: list[WordTiming]
    content_tokens: list[Token]
    sentence_vad: VadTriple
    affects: list[WordAffect]
    annotations: list[SchemaAnnotation]
    candidates: list[GestureCandidate]
    selected: GestureCandidate | None = None
    params: GestureParams | None = None
    phases: PhasedPlan | None = None
    trajectory: JointTrajectory | None = None


def _read_source(path: str | Path | None, default_name: str, label: str) -> str:
    if path is None:
        return defaults.read_default(default_name)
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise PipelineConfigError(f"cannot read {label} at {path}: {exc}") from exc


def load_resources(cfg: PipelineConfig) -> Resources:
    """Load and validate every referenced resource file."""
    if cfg.sample_rate_hz <= 0.0:
        raise PipelineConfigError(f"sample rate must be positive: {cfg.sample_rate_hz!r}")
    try:
        cfg.weights.validate()
    except ValueError as exc:
        raise PipelineConfigError(str(exc)) from exc
    try:
        vad = load_vad_lexicon(
            _read_source(cfg.vad_lexicon_path, defaults.VAD_LEXICON_FILE, "VAD lexicon")
        )
        schemas = load_schema_lexicon(
            _read_source(cfg.schema_lexicon_path, defaults.SCHEMA_LEXICON_FILE, "schema lexicon")
        )
        pos = load_pos_resources(
            _read_source(cfg.pos_resources_path, defaults.POS_RESOURCES_FILE, "POS resources")
        )
        robot = load_robot_model(
            _read_source(cfg.robot_model_path, defaults.ROBOT_MODEL_FILE, "robot model")
        )
    except (LexiconError, RobotModelError) as exc:
        raise PipelineConfigError(str(exc)) from exc
    return Resources(vad=vad, schemas=schemas, pos=pos, robot=robot)


def analyze_text(text: str, res: Resources, cfg: PipelineConfig) -> list[SentenceAnalysis]:
    """Run every stage over the input text and collect per-sentence results."""
    try:
        sentences = split_sentences(text)
        sentences = [tokenize(s) for s in sentences]
        sentences = [
            replace(s, tokens=tag_and_lemmatize(s.tokens, res.pos)) for s in sentences
        ]
    except Exception as exc:
        raise PipelineStageError("text-analysis", exc) from exc

    try:
        timings = estimate_timing(sentences, cfg.timing)
    except Exception as exc:
        raise PipelineStageError("speech-timing", exc) from exc

    analyses: list[SentenceAnalysis] = []
    for sentence, sentence_timings in zip(sentences, timings):
        analyses.append(_analyze_sentence(sentence, sentence_timings, res, cfg))
    return analyses


def _analyze_sentence(
    sentence: Sentence,
    timings: list[WordTiming],
    res: Resources,
    cfg: PipelineConfig,
) -> SentenceAnalysis:
    tokens = sentence.tokens
    negators = res.pos.negators
    try:
        content = filter_words(tokens)
        sentence_vad = sentence_sentiment(tokens, res.vad, negators)
        affects = assign_affect(tokens, res.vad, negators)
    except Exception as exc:
        raise PipelineStageError("affect-mapper", exc) from exc

    try:
        annotations = map_schemas(content, res.schemas)
    except Exception as exc:
        raise PipelineStageError("schema-mapper", exc) from exc

    try:
        candidates = join_candidates(tokens, affects, annotations, timings)
        selected = rank_and_select(candidates, cfg.weights)
        if selected is None:
            selected = beat_fallback(content, affects, sentence_vad, timings, cfg.weights)
    except Exception as exc:
        raise PipelineStageError("gesture-planner", exc) from exc

    analysis = SentenceAnalysis(
        sentence=sentence,
        timings=timings,
        content_tokens=content,
        sentence_vad=sentence_vad,
        affects=affects,
        annotations=annotations,
        candidates=candidates,
        selected=selected,
    )
    if selected is None:
        return analysis

    try:
        params = extract_params(selected.vad)
        template = BEAT_TEMPLATE if selected.schema is None else lookup_template(selected.schema)
        bounds = spoken_bounds(timings)
        assert bounds is not None  # a selected gesture implies spoken words
        plan = schedule_phases(
            selected.timing, params, bounds[0], bounds[1], cfg.timing.sentence_pause_s
        )
        scaled = apply_params(template, params)
        posed = retarget_keyframes(scaled, res.robot)
        trajectory = sample_trajectory(posed, res.robot, plan, cfg.sample_rate_hz)
    except Exception as exc:
        raise PipelineStageError("gesture-synthesis", exc) from exc

    analysis.params = params
    analysis.phases = plan
    analysis.trajectory = trajectory
    return analysis


def run_pipeline(text: str, cfg: PipelineConfig) -> dict:
    """Compile text into the gesture script document."""
    res = load_resources(cfg)
    analyses = analyze_text(text, res, cfg)
    return script_mod.build_script_document(text, analyses)


def run_explain(text: str, cfg: PipelineConfig) -> dict:
    """Compile text and return the per-stage interpretability trace."""
    res = load_resources(cfg)
    analyses = analyze_text(text, res, cfg)
    return script_mod.build_trace_document(text, analyses, cfg.weights)
