"""Command-line front end.

    errlingo run [flags] -- <command> [args...]
    errlingo translate [flags] < captured-errors.txt
    errlingo dict validate [--dict PATH]
    errlingo rate [flags] <corpus-dir>

Exit status: the wrapped command's status for ``run``; otherwise 0 on
success, 1 for dictionary findings, 2 for usage or I/O errors and 127 when
the command cannot be started.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from collections.abc import Sequence
from dataclasses import dataclass, field
from pathlib import Path
from typing import BinaryIO, TextIO

from errlingo import __version__
from errlingo.dictionary import InvalidEncoding, Lexicon, load_lexicon, validate_lexicon
from errlingo.labels import ReportLabels
from errlingo.pipeline import (
    DEFAULT_MAX_LINES,
    EmptyCorpus,
    TranslationReport,
    build_report,
    code_word_translation_rate,
    load_corpus,
    pipeline_translator,
)
from errlingo.report import render
from errlingo.runner import SpawnFailure, run_command, split_lines

log = logging.getLogger("errlingo")

DICT_ENV = "ERRLINGO_DICT"
DEFAULT_DICT = "dico.txt"

EXIT_FINDINGS = 1
EXIT_USAGE = 2
EXIT_SPAWN = 127


class UsageError(Exception):
    """Problem with the tool's own inputs; maps to exit status 2."""


@dataclass(frozen=True)
class Config:
    dictionary_path: Path = Path(DEFAULT_DICT)
    max_lines: int = DEFAULT_MAX_LINES
    guard: bool = True
    output_path: Path | None = None
    labels: ReportLabels = field(default_factory=ReportLabels)

    def __post_init__(self) -> None:
        if self.max_lines < 1:
            raise ValueError("max_lines must be at least 1")

    def load_lexicon(self) -> Lexicon:
        try:
            return load_lexicon(self.dictionary_path, self.labels)
        except OSError as exc:
            raise UsageError(f"cannot read dictionary {str(self.dictionary_path)!r}: {exc.strerror or exc}") from exc
        except InvalidEncoding as exc:
            raise UsageError(f"{self.dictionary_path}: {exc}") from exc


def _emit(document: str, output_path: Path | None) -> None:
    data = document.encode("utf-8")
    if output_path is None:
        sys.stdout.flush()
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()
    else:
        try:
            # Truncates any earlier report: a second run simply overwrites it.
            output_path.write_bytes(data)
        except OSError as exc:
            raise UsageError(f"cannot write {str(output_path)!r}: {exc.strerror or exc}") from exc


def _note_truncation(report: TranslationReport, total: int) -> None:
    if report.truncated:
        log.warning("showing the first %d of %d error lines", report.max_lines, total)


def cmd_run(config: Config, argv: Sequence[str]) -> int:
    lex = config.load_lexicon()
    # The report already carries stdout; relay it live only when the report goes to a file.
    passthrough = sys.stdout.buffer if config.output_path is not None else None
    try:
        result = run_command(argv, passthrough=passthrough)
    except SpawnFailure as exc:
        log.error("%s", exc.strerror or exc)
        return EXIT_SPAWN
    lines = result.stderr_lines
    report = build_report(lines, lex, config.max_lines, config.guard)
    _note_truncation(report, len(lines))
    _emit(render(report, result.stdout_text, config.labels), config.output_path)
    return result.shell_status


def cmd_translate(config: Config, stream: BinaryIO | TextIO | None = None) -> int:
    lex = config.load_lexicon()
    source = stream if stream is not None else sys.stdin.buffer
    data = source.read()
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise UsageError(f"input is not valid UTF-8: {exc}") from exc
    lines = split_lines(data)
    report = build_report(lines, lex, config.max_lines, config.guard)
    _note_truncation(report, len(lines))
    _emit(render(report, None, config.labels), config.output_path)
    return 0


def cmd_dict_validate(config: Config) -> int:
    try:
        document = config.dictionary_path.read_bytes()
        result = validate_lexicon(document)
    except OSError as exc:
        raise UsageError(f"cannot read dictionary {str(config.dictionary_path)!r}: {exc.strerror or exc}") from exc
    except InvalidEncoding as exc:
        raise UsageError(f"{config.dictionary_path}: {exc}") from exc
    sys.stdout.write(result.format())
    return 0 if result.ok else EXIT_FINDINGS


def cmd_rate(config: Config, corpus_dir: Path) -> int:
    lex = config.load_lexicon()
    try:
        corpus = load_corpus(corpus_dir)
    except (OSError, UnicodeDecodeError) as exc:
        raise UsageError(f"cannot read corpus {str(corpus_dir)!r}: {exc}") from exc
    try:
        rate = code_word_translation_rate(corpus, pipeline_translator(lex, config.guard, config.max_lines))
    except EmptyCorpus as exc:
        raise UsageError(f"{corpus_dir}: {exc}") from exc
    print(f"{rate:.1f}%")
    return 0


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def _add_dict_flag(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--dict",
        dest="dictionary",
        metavar="PATH",
        type=Path,
        help=f"lexicon file (default: ${DICT_ENV} or {DEFAULT_DICT})",
    )


def _add_common_flags(p: argparse.ArgumentParser, output: bool = True) -> None:
    _add_dict_flag(p)
    p.add_argument("--max-lines", type=_positive_int, default=DEFAULT_MAX_LINES, metavar="N",
                   help="translate only the first N error lines (default: %(default)s)")
    p.add_argument("--no-guard", dest="guard", action="store_false",
                   help="also look up quoted words, locations and ALL-CAPS keywords")
    if output:
        p.add_argument("--output", type=Path, metavar="PATH", help="write the report here instead of stdout")
        defaults = ReportLabels()
        for name in ("results", "errors", "translation", "line"):
            p.add_argument(f"--label-{name}", metavar="TEXT", default=getattr(defaults, name),
                           help="section label (default: %(default)s)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="errlingo",
        description="Run a compiler or interpreter and gloss its error messages word by word.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    run = sub.add_parser("run", help="run a command and translate its error output",
                         usage="%(prog)s [flags] -- COMMAND [ARGS...]")
    _add_common_flags(run)

    translate = sub.add_parser("translate", help="translate error lines read from stdin")
    _add_common_flags(translate)

    dict_ = sub.add_parser("dict", help="dictionary utilities")
    dict_sub = dict_.add_subparsers(dest="dict_command", required=True, metavar="ACTION")
    validate = dict_sub.add_parser("validate", help="check a lexicon file for problems")
    _add_dict_flag(validate)

    rate = sub.add_parser("rate", help="percentage of annotated code words that get translated")
    _add_common_flags(rate, output=False)
    rate.add_argument("corpus_dir", type=Path, metavar="CORPUS_DIR")
    return parser


def _config(args: argparse.Namespace) -> Config:
    dictionary = args.dictionary or Path(os.environ.get(DICT_ENV) or DEFAULT_DICT)
    labels = ReportLabels()
    if hasattr(args, "label_results"):
        try:
            labels = ReportLabels(args.label_results, args.label_errors, args.label_translation, args.label_line)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    return Config(
        dictionary_path=dictionary,
        max_lines=getattr(args, "max_lines", DEFAULT_MAX_LINES),
        guard=getattr(args, "guard", True),
        output_path=getattr(args, "output", None),
        labels=labels,
    )


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    if not logging.getLogger().handlers and not log.handlers:
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter("errlingo: %(message)s"))
        log.addHandler(handler)
        log.propagate = False

    command: list[str] = []
    if "--" in argv:
        cut = argv.index("--")
        argv, command = argv[:cut], argv[cut + 1:]

    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "run" and not command:
        parser.error("run: expected '--' followed by the command to execute")
    if args.command != "run" and command:
        parser.error(f"{args.command}: unexpected arguments after '--'")

    try:
        config = _config(args)
        if args.command == "run":
            return cmd_run(config, command)
        if args.command == "translate":
            return cmd_translate(config)
        if args.command == "dict":
            return cmd_dict_validate(config)
        return cmd_rate(config, args.corpus_dir)
    except UsageError as exc:
        log.error("%s", exc)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
