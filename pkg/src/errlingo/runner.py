"""Run a command, relay its standard output and capture its error stream."""

from __future__ import annotations

import logging
import subprocess
import threading
from collections.abc import Sequence
from dataclasses import dataclass
from typing import BinaryIO

logger = logging.getLogger(__name__)

_CHUNK = 65536


class SpawnFailure(OSError):
    """The command could not be started at all."""


class CaptureFailure(OSError):
    """Reading one of the child's streams failed mid-run."""


@dataclass(frozen=True)
class RunRequest:
    argv: tuple[str, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "argv", tuple(self.argv))
        if not self.argv or not self.argv[0]:
            raise ValueError("argv must name a program")


@dataclass(frozen=True)
class RunResult:
    exit_status: int
    stdout_bytes: bytes
    stderr_bytes: bytes

    @property
    def signal(self) -> int | None:
        """Signal number if the child was killed by a signal."""
        return -self.exit_status if self.exit_status < 0 else None

    @property
    def stdout_text(self) -> str:
        return self.stdout_bytes.decode("utf-8", errors="replace")

    @property
    def stderr_lines(self) -> list[str]:
        return split_lines(self.stderr_bytes.decode("utf-8", errors="replace"))

    @property
    def shell_status(self) -> int:
        """Exit status as a shell reports it: 128 + N for signal N."""
        return 128 + self.signal if self.signal is not None else self.exit_status


def split_lines(text: str) -> list[str]:
    """Split on ``\\n`` only; a missing final newline is tolerated."""
    if not text:
        return []
    lines = text.split("\n")
    if lines[-1] == "":
        lines.pop()
    return lines


def _drain(stream: BinaryIO, sink: list[bytes], errors: list[BaseException], tee: BinaryIO | None) -> None:
    try:
        while chunk := stream.read1(_CHUNK) if hasattr(stream, "read1") else stream.read(_CHUNK):
            sink.append(chunk)
            if tee is not None:
                tee.write(chunk)
                tee.flush()
    except (OSError, ValueError) as exc:
        errors.append(exc)
    finally:
        stream.close()


def run_command(req: RunRequest | Sequence[str], passthrough: BinaryIO | None = None) -> RunResult:
    """Run ``req.argv`` without a shell and wait for it.

    Both output pipes are drained on their own threads so a child that fills
    one pipe cannot stall on the other.  Standard output is always recorded
    and, when *passthrough* is given, copied there as it arrives.  Standard
    input, environment and working directory are inherited.
    """
    if not isinstance(req, RunRequest):
        req = RunRequest(tuple(req))
    try:
        proc = subprocess.Popen(req.argv, stdout=subprocess.PIPE, stderr=subprocess.PIPE)
    except OSError as exc:
        raise SpawnFailure(exc.errno, f"cannot run {req.argv[0]!r}: {exc.strerror or exc}") from exc

    out: list[bytes] = []
    err: list[bytes] = []
    failures: list[BaseException] = []
    assert proc.stdout is not None and proc.stderr is not None
    threads = [
        threading.Thread(target=_drain, args=(proc.stdout, out, failures, passthrough), daemon=True),
        threading.Thread(target=_drain, args=(proc.stderr, err, failures, None), daemon=True),
    ]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    status = proc.wait()
    if failures:
        raise CaptureFailure(f"error while reading output of {req.argv[0]!r}: {failures[0]}")
    logger.debug("%s exited with %d", req.argv[0], status)
    return RunResult(status, b"".join(out), b"".join(err))
