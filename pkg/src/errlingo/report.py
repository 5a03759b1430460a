"""Plain-text layout of a translation report.

Example with the default labels::

               RESULTATS
    Bonjour
               ERREURS

    LIGNE 1
    ./testerr.sh: line 6: syntax error near unexpected token `;'
               TRADUCTION 1
    line=ligne
    error=erreur
    ...

"""

from __future__ import annotations

from errlingo.labels import ReportLabels
from errlingo.pipeline import TranslationReport

INDENT = " " * 11


def render(
    report: TranslationReport,
    stdout_text: str | None = "",
    labels: ReportLabels | None = None,
) -> str:
    """Render *report* as a document.

    *stdout_text* is the relayed standard output of the command; pass
    ``None`` to leave out the results section entirely (offline mode).
    """
    labels = labels or ReportLabels()
    out: list[str] = []
    if stdout_text is not None:
        out.append(f"{INDENT}{labels.results}\n")
        if stdout_text:
            out.append(stdout_text if stdout_text.endswith("\n") else stdout_text + "\n")
    out.append(f"{INDENT}{labels.errors}\n")
    for line, pairs in report.lines:
        out.append("\n")
        out.append(f"{labels.line} {line.index}\n")
        out.append(f"{line.raw}\n")
        out.append(f"{INDENT}{labels.translation} {line.index}\n")
        out.extend(f"{pair.source}={pair.gloss}\n" for pair in pairs)
    out.append("\n")
    return "".join(out)
