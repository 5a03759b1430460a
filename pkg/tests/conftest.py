from __future__ import annotations

import shutil
import stat
from pathlib import Path

import pytest

import errlingo
from errlingo.dictionary import Lexicon, load_lexicon

DATA = Path(errlingo.__file__).parent / "data"
FIXTURES = DATA / "fixtures"
CORPUS = DATA / "corpus"
DICO = DATA / "dico.txt"
GOLDEN = Path(__file__).parent / "golden"

# Filled in by test_acceptance; printed at the end of the run.
ACCEPTANCE_RESULTS: list[str] = []


@pytest.fixture(scope="session")
def dico() -> Lexicon:
    return load_lexicon(DICO)


@pytest.fixture
def workdir(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> Path:
    """A scratch cwd holding dico.txt and an executable ./testerr.sh."""
    shutil.copy(DICO, tmp_path / "dico.txt")
    script = tmp_path / "testerr.sh"
    shutil.copy(FIXTURES / "testerr.sh", script)
    script.chmod(script.stat().st_mode | stat.S_IXUSR)
    monkeypatch.chdir(tmp_path)
    monkeypatch.delenv("ERRLINGO_DICT", raising=False)
    return tmp_path


def fixture_lines(name: str) -> list[str]:
    return (FIXTURES / name).read_text(encoding="utf-8").splitlines()


def pytest_terminal_summary(terminalreporter) -> None:
    if ACCEPTANCE_RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_RESULTS:
            terminalreporter.write_line(line)
