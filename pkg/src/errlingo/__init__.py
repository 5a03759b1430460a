"""Word-by-word glossing of compiler and interpreter error messages."""

from errlingo.dictionary import (
    InvalidEncoding,
    Lexicon,
    LexiconEntry,
    ValidationReport,
    load_lexicon,
    lookup,
    parse_lexicon,
    validate_lexicon,
)
from errlingo.labels import ReportLabels
from errlingo.pipeline import (
    DiagnosticLine,
    EmptyCorpus,
    TranslationPair,
    TranslationReport,
    build_report,
    code_word_translation_rate,
    translate_line,
)
from errlingo.report import render
from errlingo.runner import CaptureFailure, RunRequest, RunResult, SpawnFailure, run_command
from errlingo.tokenizer import Token, TokenKind, classify_token, split_line

__version__ = "0.1.0"

__all__ = [
    "CaptureFailure",
    "DiagnosticLine",
    "EmptyCorpus",
    "InvalidEncoding",
    "Lexicon",
    "LexiconEntry",
    "ReportLabels",
    "RunRequest",
    "RunResult",
    "SpawnFailure",
    "Token",
    "TokenKind",
    "TranslationPair",
    "TranslationReport",
    "ValidationReport",
    "build_report",
    "classify_token",
    "code_word_translation_rate",
    "load_lexicon",
    "lookup",
    "parse_lexicon",
    "render",
    "run_command",
    "split_line",
    "translate_line",
    "validate_lexicon",
]
