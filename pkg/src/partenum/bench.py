"""Timing and operation-count harness for the exactly-k steppers X and Y.

Each cell enumerates every k-block partition of an n-set with one algorithm,
timed with a monotonic clock.  Rows are the median over repetitions; op
counts are deterministic and taken from the first repetition.  Cells run one
after another on the calling thread so that timings do not compete.
"""

from __future__ import annotations

import csv
import io
import logging
import math
import statistics
import sys
import time
import warnings
from collections.abc import Iterable
from dataclasses import dataclass
from pathlib import Path

from .blockcount import BlockCountSpec
from .enumerators import OpCounters, drain, first

log = logging.getLogger(__name__)

CSV_HEADER = ("k", "Xpn", "Ypn", "X", "Y", "writes_x", "writes_y", "count")


@dataclass(frozen=True)
class BenchRecord:
    k: int
    per_next_x: float
    per_next_y: float
    total_x: float
    total_y: float
    writes_x: float
    writes_y: float
    count: int

    @property
    def speedup(self) -> float:
        return self.total_x / self.total_y if self.total_y else math.inf


@dataclass(frozen=True)
class CellResult:
    seconds: float
    count: int
    checksum: int
    counters: OpCounters


def time_cell(n: int, k: int, algorithm: str, repetitions: int = 3, min_seconds: float = 0.0) -> CellResult:
    """Median wall time of a full exactly-k enumeration with ``algorithm``.

    A repetition that finishes faster than ``min_seconds`` is looped until it
    does not, and its time divided by the loop count.
    """
    spec = BlockCountSpec.exactly(k)
    state = first(n, spec)
    t0 = time.perf_counter()
    count, checksum = drain(state, algorithm, checksum=True)
    elapsed = time.perf_counter() - t0
    counters = state.counters
    loops = 1
    if min_seconds > 0 and elapsed < min_seconds:
        loops = max(1, math.ceil(min_seconds / max(elapsed, 1e-9)))

    samples = [elapsed] if loops == 1 else []
    while len(samples) < repetitions:
        states = [first(n, spec) for _ in range(loops)]
        t0 = time.perf_counter()
        for s in states:
            drain(s, algorithm, checksum=True)
        samples.append((time.perf_counter() - t0) / loops)
    return CellResult(statistics.median(samples), count, checksum, counters)


def run_comparison(
    n: int,
    k_range: Iterable[int],
    repetitions: int = 3,
    min_seconds: float = 0.05,
) -> list[BenchRecord]:
    """Time X against Y for every ``k`` in ``k_range`` with ``2 <= k <= n-1``.

    Raises RuntimeError if the two algorithms visit different sequences.
    """
    if repetitions < 1:
        raise ValueError("repetitions must be >= 1")
    ks = sorted(set(k_range))
    for k in ks:
        if not 2 <= k <= n - 1:
            warnings.warn(f"skipping k={k}: outside 2..{n - 1}", stacklevel=2)
    ks = [k for k in ks if 2 <= k <= n - 1]
    # compile outside the timed region
    for algorithm in ("X", "Y"):
        drain(first(3, BlockCountSpec.exactly(2)), algorithm, checksum=True)

    records = []
    for k in ks:
        x = time_cell(n, k, "X", repetitions, min_seconds)
        y = time_cell(n, k, "Y", repetitions, min_seconds)
        if (x.count, x.checksum) != (y.count, y.checksum):
            raise RuntimeError(f"X and Y disagree at n={n}, k={k}")
        log.info("k=%d count=%d X=%.4gs Y=%.4gs", k, x.count, x.seconds, y.seconds)
        records.append(
            BenchRecord(
                k=k,
                per_next_x=x.seconds / x.count,
                per_next_y=y.seconds / y.count,
                total_x=x.seconds,
                total_y=y.seconds,
                writes_x=x.counters.writes_per_next,
                writes_y=y.counters.writes_per_next,
                count=x.count,
            )
        )
    return records


def operation_counts(n: int, spec: BlockCountSpec | None = None, algorithm: str | None = None) -> OpCounters:
    """Counters after a full enumeration (``next_calls`` includes the final,
    exhausting call)."""
    state = first(n, spec)
    drain(state, algorithm)
    return state.counters


def _row(r: BenchRecord) -> list[str]:
    return [
        str(r.k),
        repr(r.per_next_x),
        repr(r.per_next_y),
        repr(r.total_x),
        repr(r.total_y),
        repr(r.writes_x),
        repr(r.writes_y),
        str(r.count),
    ]


def emit_csv(records: Iterable[BenchRecord], destination=None) -> None:
    """Write records as CSV to a path, an open text file, or stdout (None/"-")."""
    records = list(records)
    if not records:
        raise ValueError("no records to write")
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in records:
        writer.writerow(_row(r))
    text = buf.getvalue()
    if destination is None or destination == "-":
        sys.stdout.write(text)
    elif hasattr(destination, "write"):
        destination.write(text)
    else:
        Path(destination).write_text(text)


def read_csv(source) -> list[BenchRecord]:
    """Parse what :func:`emit_csv` wrote (path or open text file)."""
    if hasattr(source, "read"):
        text = source.read()
    else:
        text = Path(source).read_text()
    rows = list(csv.reader(io.StringIO(text)))
    if tuple(rows[0]) != CSV_HEADER:
        raise ValueError(f"unexpected header {rows[0]}")
    return [
        BenchRecord(int(k), float(xpn), float(ypn), float(x), float(y), float(wx), float(wy), int(c))
        for k, xpn, ypn, x, y, wx, wy, c in rows[1:]
    ]
