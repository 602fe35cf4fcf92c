"""Command line front end.

Usage:
  gesturec compile --text "Grab the box." --output script.json
  gesturec compile --input story.txt --explain trace.json --csv motion.csv
  echo "Push it up." | gesturec compile

With no resource flags the bundled demonstration lexicons and robot model are
used. Exit codes: 0 success, 1 input or format error, 2 configuration error.
Outputs are fully rendered before anything is written, so a failing run never
leaves a partial file behind.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import script as script_mod
from .pipeline import (
    PipelineConfig,
    PipelineConfigError,
    PipelineStageError,
    analyze_text,
    load_resources,
)
from .planner import RankerWeights
from .timing import TimingConfig

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_CONFIG = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gesturec",
        description="Compile text into a speech-synchronized robot gesture script.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    compile_p = sub.add_parser("compile", help="compile text into a gesture script")
    source = compile_p.add_mutually_exclusive_group()
    source.add_argument("--input", help="read input text from this file")
    source.add_argument("--text", help="use this string as the input text")
    compile_p.add_argument("--vad-lexicon", help="path to the affect lexicon TSV")
    compile_p.add_argument("--schema-lexicon", help="path to the schema lexicon JSON")
    compile_p.add_argument("--pos-resources", help="path to the POS resources JSON")
    compile_p.add_argument("--robot", help="path to the robot model JSON")
    compile_p.add_argument("--rate-syllable-s", type=float, default=0.20,
                           help="seconds per syllable (default 0.20)")
    compile_p.add_argument("--gap-s", type=float, default=0.05,
                           help="gap between words in seconds (default 0.05)")
    compile_p.add_argument("--pause-s", type=float, default=0.30,
                           help="pause between sentences in seconds (default 0.30)")
    compile_p.add_argument("--weights", default="0.5,0.3,0.2",
                           help="ranker weights affect,pos,schema (default 0.5,0.3,0.2)")
    compile_p.add_argument("--sample-rate", type=float, default=50.0,
                           help="trajectory sample rate in Hz (default 50)")
    compile_p.add_argument("--output", help="write the script here instead of stdout")
    compile_p.add_argument("--explain", help="also write a per-stage trace to this path")
    compile_p.add_argument("--csv", help="also write trajectory samples as CSV here")
    return parser


def _parse_weights(raw: str) -> RankerWeights:
    parts = raw.split(",")
    if len(parts) != 3:
        raise ValueError(f"expected three comma-separated weights, got {raw!r}")
    try:
        affect, pos, schema = (float(p) for p in parts)
    except ValueError:
        raise ValueError(f"non-numeric ranker weight in {raw!r}") from None
    return RankerWeights(affect=affect, pos=pos, schema=schema)


def _read_input(args: argparse.Namespace) -> str:
    if args.text is not None:
        return args.text
    if args.input is not None:
        return Path(args.input).read_text(encoding="utf-8")
    return sys.stdin.read()


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)

    try:
        cfg = PipelineConfig(
            vad_lexicon_path=args.vad_lexicon,
            schema_lexicon_path=args.schema_lexicon,
            pos_resources_path=args.pos_resources,
            robot_model_path=args.robot,
            timing=TimingConfig(
                syllable_duration_s=args.rate_syllable_s,
                interword_gap_s=args.gap_s,
                sentence_pause_s=args.pause_s,
            ),
            weights=_parse_weights(args.weights),
            sample_rate_hz=args.sample_rate,
        )
        resources = load_resources(cfg)
    except (PipelineConfigError, ValueError) as exc:
        print(f"gesturec: configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG

    try:
        text = _read_input(args)
    except (OSError, UnicodeDecodeError) as exc:
        print(f"gesturec: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT

    try:
        analyses = analyze_text(text, resources, cfg)
        script_doc = script_mod.build_script_document(text, analyses)
        rendered = script_mod.serialize_document(script_doc, floats="fixed")
        trace_text = None
        if args.explain:
            trace_doc = script_mod.build_trace_document(text, analyses, cfg.weights)
            trace_text = script_mod.serialize_document(trace_doc, floats="repr")
        csv_text = None
        if args.csv:
            csv_text = script_mod.trajectory_csv(analyses, resources.robot.joint_names)
    except PipelineStageError as exc:
        print(f"gesturec: {exc}", file=sys.stderr)
        return EXIT_INPUT

    # All outputs are rendered; only now touch the filesystem.
    if args.output:
        Path(args.output).write_text(rendered, encoding="utf-8")
    else:
        sys.stdout.write(rendered)
    if trace_text is not None:
        Path(args.explain).write_text(trace_text, encoding="utf-8")
    if csv_text is not None:
        Path(args.csv).write_text(csv_text, encoding="utf-8")
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
