"""Batch command-line driver: parse, normalize, emit, render, optionally check.

Exit statuses: 0 success, 1 diagnostics with errors (including usage errors),
2 check found a false axiom or theorem (or could not establish truth),
3 I/O failure. ``both`` mode writes the two encodings into ``shallow/`` and
``deep/`` subdirectories because they share the specific context filename.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path

from .deep_codegen import GENERIC_NAME, emit_deep
from .diagnostics import Diagnostic
from .eventb_ast import print_context
from .finite_checker import (
    DEFAULT_MAX_DOMAIN,
    CheckError,
    EvalError,
    check_context_against,
    derive_interpretation,
)
from .owl_ingest import parse_owl
from .pivot_model import pivot_to_json, sanitize_identifier, to_pivot, validate_pivot
from .shallow_codegen import emit_shallow

EXIT_OK = 0
EXIT_DIAGNOSTICS = 1
EXIT_CHECK_FAILED = 2
EXIT_IO_FAILURE = 3

STYLE_ENV_VAR = "ONTOFORGE_STYLE"


@dataclass
class RunConfig:
    input_path: Path
    output_dir: Path = field(default_factory=lambda: Path("."))
    mode: str = "shallow"  # shallow | deep | both
    style: str = "ascii"  # ascii | unicode
    check: bool = False
    check_json: bool = False
    name: str | None = None
    dump_pivot: bool = False
    max_domain: int = DEFAULT_MAX_DOMAIN
    verbose: bool = False

    def __post_init__(self) -> None:
        if self.mode not in ("shallow", "deep", "both"):
            raise ValueError(f"unknown mode '{self.mode}'")
        if self.style not in ("ascii", "unicode"):
            raise ValueError(f"unknown style '{self.style}'")


def default_context_name(stem: str) -> str:
    name = sanitize_identifier(stem)
    name = name[0].upper() + name[1:]
    if not name.endswith("_Ontology"):
        name += "_Ontology"
    return name


def _report_diagnostics(path: Path, diagnostics: list[Diagnostic]) -> None:
    for diag in diagnostics:
        print(f"{path}:{diag}", file=sys.stderr)


def run(config: RunConfig) -> int:
    """Execute the pipeline for one input file."""

    def stage(message: str) -> None:
        if config.verbose:
            print(f"[ontoforge] {message}", file=sys.stderr)

    try:
        stage(f"reading {config.input_path}")
        source = config.input_path.read_bytes()
    except OSError as exc:
        print(f"{config.input_path}: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO_FAILURE

    stage("parsing input model")
    parsed = parse_owl(source)
    if isinstance(parsed, list):
        _report_diagnostics(config.input_path, parsed)
        return EXIT_DIAGNOSTICS
    _report_diagnostics(config.input_path, parsed.warnings)

    stage("building pivot model")
    pivot = to_pivot(parsed)
    if isinstance(pivot, list):
        _report_diagnostics(config.input_path, pivot)
        return EXIT_DIAGNOSTICS
    stage("validating pivot model")
    _report_diagnostics(config.input_path, validate_pivot(pivot))

    if config.name is not None:
        name = sanitize_identifier(config.name)
    else:
        name = default_context_name(config.input_path.stem)
    if name == GENERIC_NAME:
        print(
            f"{config.input_path}: context name '{GENERIC_NAME}' is reserved for the generic context",
            file=sys.stderr,
        )
        return EXIT_DIAGNOSTICS

    outputs: list[tuple[Path, str]] = []
    shallow_ctx = None
    deep_pair = None

    if config.mode in ("shallow", "both"):
        stage("emitting shallow context")
        shallow_ctx = emit_shallow(pivot, name)
        prefix = Path("shallow") if config.mode == "both" else Path(".")
        outputs.append((prefix / f"{name}.ctx", print_context(shallow_ctx, config.style)))
    if config.mode in ("deep", "both"):
        stage("emitting deep contexts")
        generic, specific, warnings = emit_deep(pivot, name)
        _report_diagnostics(config.input_path, warnings)
        deep_pair = (generic, specific)
        prefix = Path("deep") if config.mode == "both" else Path(".")
        outputs.append((prefix / f"{GENERIC_NAME}.ctx", print_context(generic, config.style)))
        outputs.append((prefix / f"{name}.ctx", print_context(specific, config.style)))
    if config.dump_pivot:
        outputs.append((Path(f"{name}.pivot.json"), pivot_to_json(pivot)))

    try:
        for relative, text in outputs:
            target = config.output_dir / relative
            target.parent.mkdir(parents=True, exist_ok=True)
            stage(f"writing {target}")
            target.write_text(text, encoding="utf-8")
    except OSError as exc:
        print(f"{config.output_dir}: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO_FAILURE

    if not config.check:
        return EXIT_OK

    stage("deriving finite interpretation")
    derived = derive_interpretation(pivot)
    reports = {}
    try:
        if shallow_ctx is not None:
            stage("checking shallow context")
            reports["shallow"] = check_context_against(
                shallow_ctx, None, derived.shallow, config.max_domain
            )
        if deep_pair is not None:
            stage("checking deep contexts")
            reports["deep"] = check_context_against(
                deep_pair[1], deep_pair[0], derived.deep, config.max_domain
            )
    except (CheckError, EvalError) as exc:
        print(f"{config.input_path}: check failed: {exc}", file=sys.stderr)
        return EXIT_CHECK_FAILED

    if config.check_json:
        payload = {encoding: json.loads(report.to_json()) for encoding, report in reports.items()}
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        for encoding, report in reports.items():
            print(f"# {name} [{encoding}]")
            print(report.to_text(), end="")
    if all(report.all_true for report in reports.values()):
        return EXIT_OK
    return EXIT_CHECK_FAILED


class _Parser(argparse.ArgumentParser):
    # Usage errors belong to exit status 1, not argparse's default 2.
    def error(self, message: str):  # noqa: A002 - argparse signature
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_DIAGNOSTICS)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="ontoforge",
        description="Convert OWL ontology documents into Event-B context specifications.",
    )
    parser.add_argument("inputs", nargs="+", type=Path, help="input .owl files")
    parser.add_argument("--mode", choices=("shallow", "deep", "both"), default="shallow")
    parser.add_argument(
        "--style",
        choices=("ascii", "unicode"),
        default=None,
        help=f"output token style (default: ${STYLE_ENV_VAR} or ascii)",
    )
    parser.add_argument("--check", action="store_true", help="evaluate the generated contexts")
    parser.add_argument(
        "--check-json", action="store_true", help="print the check report as JSON (implies --check)"
    )
    parser.add_argument("--name", default=None, help="context name (default: derived from the file stem)")
    parser.add_argument("--out", type=Path, default=Path("."), help="output directory")
    parser.add_argument("--dump-pivot", action="store_true", help="write the pivot model as JSON")
    parser.add_argument(
        "--max-domain",
        type=int,
        default=DEFAULT_MAX_DOMAIN,
        help="cap on materialized set sizes during checking",
    )
    parser.add_argument("--verbose", action="store_true", help="echo pipeline stages to stderr")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    style = args.style
    if style is None:
        style = os.environ.get(STYLE_ENV_VAR, "ascii")
        if style not in ("ascii", "unicode"):
            parser.error(f"${STYLE_ENV_VAR} must be 'ascii' or 'unicode', not '{style}'")
    if args.name is not None and len(args.inputs) > 1:
        parser.error("--name cannot be combined with multiple inputs")

    status = EXIT_OK
    for input_path in args.inputs:
        config = RunConfig(
            input_path=input_path,
            output_dir=args.out,
            mode=args.mode,
            style=style,
            check=args.check or args.check_json,
            check_json=args.check_json,
            name=args.name,
            dump_pivot=args.dump_pivot,
            max_domain=args.max_domain,
            verbose=args.verbose,
        )
        status = max(status, run(config))
    return status


if __name__ == "__main__":
    raise SystemExit(main())
