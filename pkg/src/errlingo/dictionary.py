"""Lexicon files: parsing, validation and whole-word lookup.

A lexicon file is UTF-8 text with one ``key=gloss`` entry per line.  The
first ``=`` separates key from gloss; lines without ``=`` are headers or
comments and are skipped.  Keys are matched case-insensitively and only as
whole tokens, e.g. ``ERROR`` and ``error:`` both find ``error=erreur`` but
``errors`` does not.
"""

from __future__ import annotations

import logging
import re
from collections.abc import Iterator, Mapping
from dataclasses import dataclass, field
from pathlib import Path
from types import MappingProxyType

from errlingo.labels import ReportLabels

logger = logging.getLogger(__name__)

_EDGE_PUNCT = re.compile(r"^\W+|\W+$")


class InvalidEncoding(ValueError):
    """Raised when a lexicon document is not valid UTF-8."""


def fold(word: str) -> str:
    return word.casefold()


def strip_punctuation(word: str) -> str:
    """Remove leading and trailing characters that are not letters, digits or ``_``."""
    return _EDGE_PUNCT.sub("", word)


@dataclass(frozen=True)
class LexiconEntry:
    key: str
    gloss: str

    def __post_init__(self) -> None:
        if not self.key or any(c.isspace() for c in self.key):
            raise ValueError(f"invalid lexicon key {self.key!r}")
        if not self.gloss.rstrip():
            raise ValueError(f"empty gloss for key {self.key!r}")


@dataclass(frozen=True)
class Lexicon:
    entries: Mapping[str, LexiconEntry]
    source_path: str = "<string>"
    labels: ReportLabels = field(default_factory=ReportLabels)

    def __post_init__(self) -> None:
        # Freeze a private copy so callers cannot mutate the lexicon afterwards.
        object.__setattr__(self, "entries", MappingProxyType(dict(self.entries)))

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, token: object) -> bool:
        return isinstance(token, str) and bool(token) and lookup(self, token) is not None


@dataclass(frozen=True)
class _Line:
    """One classified line of a lexicon document."""

    number: int
    kind: str  # "entry", "header", "blank", "empty-key", "malformed"
    key: str = ""
    gloss: str = ""
    text: str = ""


def _decode(document: str | bytes) -> str:
    if isinstance(document, bytes):
        try:
            return document.decode("utf-8-sig")
        except UnicodeDecodeError as exc:
            raise InvalidEncoding(f"lexicon is not valid UTF-8: {exc}") from exc
    return document


def _scan(text: str) -> Iterator[_Line]:
    for number, raw in enumerate(text.split("\n"), start=1):
        if not raw.strip():
            yield _Line(number, "blank", text=raw)
            continue
        if "=" not in raw:
            yield _Line(number, "header", text=raw)
            continue
        key, gloss = raw.split("=", 1)
        key = fold(key.strip())
        gloss = gloss.rstrip()
        if not key:
            yield _Line(number, "empty-key", text=raw)
        elif any(c.isspace() for c in key) or not gloss:
            yield _Line(number, "malformed", key=key, gloss=gloss, text=raw)
        else:
            yield _Line(number, "entry", key=key, gloss=gloss, text=raw)


def parse_lexicon(
    document: str | bytes,
    source_path: str = "<string>",
    labels: ReportLabels | None = None,
) -> Lexicon:
    """Parse a lexicon document.

    Duplicate keys keep the last entry; empty or malformed entry lines are
    dropped.  Both cases are logged as warnings.  Raises
    :class:`InvalidEncoding` when *document* is bytes that are not UTF-8.
    """
    entries: dict[str, LexiconEntry] = {}
    for line in _scan(_decode(document)):
        if line.kind == "entry":
            if line.key in entries:
                logger.warning(
                    "%s:%d: duplicate key %r, later entry wins", source_path, line.number, line.key
                )
            entries[line.key] = LexiconEntry(line.key, line.gloss)
        elif line.kind == "empty-key":
            logger.warning("%s:%d: entry with empty key rejected", source_path, line.number)
        elif line.kind == "malformed":
            logger.warning("%s:%d: malformed entry rejected: %r", source_path, line.number, line.text)
    return Lexicon(entries, source_path, labels or ReportLabels())


def load_lexicon(path: str | Path, labels: ReportLabels | None = None) -> Lexicon:
    """Read and parse a lexicon file.  ``OSError`` propagates to the caller."""
    path = Path(path)
    return parse_lexicon(path.read_bytes(), str(path), labels)


def lookup(lex: Lexicon, token: str) -> LexiconEntry | None:
    """Find the entry for *token*, or ``None``.

    The case-folded token is tried as a key first, so punctuated keys such as
    ``last):`` take priority; then the token with its edge punctuation
    removed.  Glosses are never searched.
    """
    folded = fold(token)
    entry = lex.entries.get(folded)
    if entry is not None:
        return entry
    stripped = strip_punctuation(folded)
    if stripped and stripped != folded:
        return lex.entries.get(stripped)
    return None


@dataclass(frozen=True)
class ValidationReport:
    entries: int
    headers_skipped: int
    duplicate_keys: tuple[tuple[str, tuple[int, ...]], ...]
    empty_keys: tuple[int, ...]
    malformed: tuple[int, ...]

    @property
    def findings(self) -> int:
        return len(self.duplicate_keys) + len(self.empty_keys) + len(self.malformed)

    @property
    def ok(self) -> bool:
        return self.findings == 0

    def format(self) -> str:
        out = [
            f"entries: {self.entries}",
            f"header lines skipped: {self.headers_skipped}",
            f"duplicate keys: {len(self.duplicate_keys)}",
            f"empty keys: {len(self.empty_keys)}",
            f"malformed lines: {len(self.malformed)}",
        ]
        for key, numbers in self.duplicate_keys:
            out.append(f"duplicate key {key!r} on lines {', '.join(map(str, numbers))}")
        for number in self.empty_keys:
            out.append(f"empty key on line {number}")
        for number in self.malformed:
            out.append(f"malformed entry on line {number}")
        return "\n".join(out) + "\n"


def validate_lexicon(document: str | bytes) -> ValidationReport:
    """Count entries, skipped headers and problems in a lexicon document."""
    seen: dict[str, list[int]] = {}
    headers = 0
    empty: list[int] = []
    malformed: list[int] = []
    for line in _scan(_decode(document)):
        if line.kind == "entry":
            seen.setdefault(line.key, []).append(line.number)
        elif line.kind == "header":
            headers += 1
        elif line.kind == "empty-key":
            empty.append(line.number)
        elif line.kind == "malformed":
            malformed.append(line.number)
    duplicates = tuple((k, tuple(v)) for k, v in seen.items() if len(v) > 1)
    return ValidationReport(len(seen), headers, duplicates, tuple(empty), tuple(malformed))
