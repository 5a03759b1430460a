"""From captured error lines to a translation report, plus the leakage metric."""

from __future__ import annotations

from collections.abc import Callable, Iterable, Iterator, Sequence
from dataclasses import dataclass
from pathlib import Path

from errlingo.dictionary import Lexicon, LexiconEntry, lookup
from errlingo.tokenizer import Token, split_line

DEFAULT_MAX_LINES = 10
CODE_HEADER = "#code:"


class EmptyCorpus(ValueError):
    """The corpus has no annotated code words, so a rate is undefined."""


@dataclass(frozen=True)
class DiagnosticLine:
    index: int
    raw: str
    tokens: tuple[Token, ...]

    @classmethod
    def parse(cls, index: int, raw: str) -> DiagnosticLine:
        if index < 1:
            raise ValueError("line index starts at 1")
        return cls(index, raw, tuple(split_line(raw)))


@dataclass(frozen=True)
class TranslationPair:
    source: str
    gloss: str


@dataclass(frozen=True)
class TranslationReport:
    lines: tuple[tuple[DiagnosticLine, tuple[TranslationPair, ...]], ...]
    truncated: bool
    max_lines: int = DEFAULT_MAX_LINES

    @property
    def pairs(self) -> list[TranslationPair]:
        return [pair for _, pairs in self.lines for pair in pairs]


def glossed_tokens(line: DiagnosticLine, lex: Lexicon, guard: bool = True) -> Iterator[tuple[Token, LexiconEntry]]:
    """Every token occurrence the lexicon glosses, repeats included."""
    for token in line.tokens:
        if guard and token.kind.is_code:
            continue
        entry = lookup(lex, token.raw)
        if entry is not None:
            yield token, entry


def translate_line(line: DiagnosticLine, lex: Lexicon, guard: bool = True) -> list[TranslationPair]:
    """Gloss each token of *line* that the lexicon knows.

    With *guard* on, code tokens are never looked up.  A lexicon entry is
    emitted once per line, at the first token that hits it; so ``Error:``
    and a later ``error`` give a single pair.
    """
    pairs: list[TranslationPair] = []
    seen: set[str] = set()
    for token, entry in glossed_tokens(line, lex, guard):
        if entry.key not in seen:
            seen.add(entry.key)
            pairs.append(TranslationPair(token.raw, entry.gloss))
    return pairs


def build_report(
    lines: Iterable[str],
    lex: Lexicon,
    max_lines: int = DEFAULT_MAX_LINES,
    guard: bool = True,
) -> TranslationReport:
    """Number, truncate to *max_lines* and translate captured error lines."""
    if max_lines < 1:
        raise ValueError("max_lines must be at least 1")
    kept: list[tuple[DiagnosticLine, tuple[TranslationPair, ...]]] = []
    truncated = False
    for index, raw in enumerate(lines, start=1):
        if index > max_lines:
            truncated = True
            break
        diag = DiagnosticLine.parse(index, raw)
        kept.append((diag, tuple(translate_line(diag, lex, guard))))
    return TranslationReport(tuple(kept), truncated, max_lines)


# -- code-word leakage metric ------------------------------------------------


@dataclass(frozen=True)
class AnnotatedMessage:
    """A diagnostic message with the code words that occur in it."""

    text: str
    code_words: tuple[str, ...] = ()
    name: str = ""

    @classmethod
    def parse(cls, document: str, name: str = "") -> AnnotatedMessage:
        first, sep, rest = document.partition("\n")
        if first.startswith(CODE_HEADER):
            return cls(rest, tuple(first[len(CODE_HEADER):].split()), name)
        return cls(document, (), name)


# A backend maps a message to the source words it translated.
Translator = Callable[[str], Iterable[str]]


def load_corpus(corpus_dir: str | Path) -> list[AnnotatedMessage]:
    """Read every regular file in *corpus_dir*, sorted by name."""
    corpus_dir = Path(corpus_dir)
    return [
        AnnotatedMessage.parse(p.read_text(encoding="utf-8"), p.name)
        for p in sorted(corpus_dir.iterdir())
        if p.is_file()
    ]


def pipeline_translator(lex: Lexicon, guard: bool = True, max_lines: int = DEFAULT_MAX_LINES) -> Translator:
    """Backend for the leakage metric that glosses like :func:`build_report`."""

    def translate(text: str) -> set[str]:
        lines = text.splitlines()[:max_lines]
        return {
            token.raw
            for index, raw in enumerate(lines, start=1)
            for token, _ in glossed_tokens(DiagnosticLine.parse(index, raw), lex, guard)
        }

    return translate


def code_word_translation_rate(corpus: Sequence[AnnotatedMessage], translate: Translator) -> float:
    """Percentage of annotated code-word occurrences that *translate* glossed.

    An annotated word counts as translated when the backend reports that
    exact token.  Raises :class:`EmptyCorpus` when nothing is annotated.
    """
    total = 0
    leaked = 0
    for message in corpus:
        if not message.code_words:
            continue
        translated = set(translate(message.text))
        total += len(message.code_words)
        leaked += sum(word in translated for word in message.code_words)
    if total == 0:
        raise EmptyCorpus("no annotated code words in corpus")
    return 100.0 * leaked / total
