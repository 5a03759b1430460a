"""Split diagnostic lines into tokens and tell prose words from code."""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass

from errlingo.dictionary import fold, strip_punctuation

# opener -> closer
QUOTE_PAIRS = {"`": "'", "'": "'", '"': '"', "‘": "’"}

_LOCATION_PATTERNS = (
    re.compile(r"(?:^|[:.])\d+:$"),  # 6:  err.c:7:1:  err.f90:4.5:
    re.compile(r"^[\w.+-]+\.\w+:$"),  # testerr.sh:  err.c:
)


class TokenKind(str, enum.Enum):
    NATURAL = "natural"
    QUOTED = "quoted"
    ALL_CAPS_CODE = "all-caps-code"
    LOCATION = "location"

    @property
    def is_code(self) -> bool:
        return self is not TokenKind.NATURAL


@dataclass(frozen=True)
class Token:
    raw: str
    normalized: str
    kind: TokenKind

    @classmethod
    def from_raw(cls, raw: str) -> Token:
        if not raw or any(c.isspace() for c in raw):
            raise ValueError(f"token must be non-empty without whitespace: {raw!r}")
        return cls(raw, normalize(raw), classify_token(raw))


def normalize(raw: str) -> str:
    return strip_punctuation(fold(raw))


def is_quoted(raw: str) -> bool:
    return len(raw) >= 2 and QUOTE_PAIRS.get(raw[0]) == raw[-1]


def is_location(raw: str) -> bool:
    return "/" in raw or any(p.search(raw) for p in _LOCATION_PATTERNS)


def is_all_caps(raw: str) -> bool:
    letters = [c for c in raw if c.isalpha()]
    return len(raw) >= 2 and bool(letters) and all(c.isupper() for c in letters)


def classify_token(raw: str) -> TokenKind:
    """Classify one token.  Precedence: quoted, location, all-caps code, natural.

    Shapes not recognised as code fall back to natural, so at worst a code
    word receives a gloss.
    """
    if is_quoted(raw):
        return TokenKind.QUOTED
    if is_location(raw):
        return TokenKind.LOCATION
    if is_all_caps(raw):
        return TokenKind.ALL_CAPS_CODE
    return TokenKind.NATURAL


def split_line(line: str) -> list[Token]:
    """Return every whitespace-delimited token of *line*, classified, in order."""
    return [Token.from_raw(raw) for raw in line.split()]
