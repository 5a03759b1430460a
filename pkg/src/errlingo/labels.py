"""Section labels printed in a rendered report."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class ReportLabels:
    results: str = "RESULTATS"
    errors: str = "ERREURS"
    translation: str = "TRADUCTION"
    line: str = "LIGNE"

    def __post_init__(self) -> None:
        for name in ("results", "errors", "translation", "line"):
            if not getattr(self, name).strip():
                raise ValueError(f"report label {name!r} must not be empty")


ENGLISH_LABELS = ReportLabels("RESULTS", "ERRORS", "TRANSLATION", "LINE")
