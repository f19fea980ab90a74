"""Shared plumbing: prime sieve, thread budget, atomic file writes."""
from __future__ import annotations

import os
import tempfile
from pathlib import Path

import numpy as np


class BudgetError(ValueError):
    """A request exceeded a configured compute/memory budget."""


def primes_upto(n: int) -> np.ndarray:
    """All primes <= n, as an int64 array."""
    if n < 2:
        return np.empty(0, dtype=np.int64)
    sieve = np.ones(n + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, int(n**0.5) + 1):
        if sieve[p]:
            sieve[p * p :: p] = False
    return np.flatnonzero(sieve).astype(np.int64)


def thread_count() -> int:
    """Parallelism cap from CMGAPS_THREADS (default 1)."""
    raw = os.environ.get("CMGAPS_THREADS", "1")
    try:
        k = int(raw)
    except ValueError:
        return 1
    return max(1, k)


def atomic_write_bytes(path: str | Path, data: bytes) -> None:
    """Write via temp file + rename so partial output never lands at path."""
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name + ".tmp")
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(data)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def atomic_write_text(path: str | Path, text: str) -> None:
    atomic_write_bytes(path, text.encode("utf-8"))
