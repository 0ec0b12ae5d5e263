"""Exact Bell and Stirling (second kind) numbers.

All values are Python ints, so nothing overflows.  Rows of the Stirling
triangle are built on demand with ``S(n, k) = k S(n-1, k) + S(n-1, k-1)``
and kept for the life of the process.
"""

from __future__ import annotations

import threading
from collections.abc import Iterable

from .blockcount import BlockCountSpec, Regime


class CountTable:
    """Stirling triangle ``S(n, k)`` for ``0 <= k <= n <= N`` and Bell numbers."""

    def __init__(self):
        self._rows: list[list[int]] = [[1]]
        self._bell: list[int] = [1]
        self._lock = threading.Lock()

    @property
    def size(self) -> int:
        return len(self._rows) - 1

    def extend(self, n: int) -> None:
        with self._lock:
            while len(self._rows) <= n:
                prev = self._rows[-1]
                m = len(prev)
                row = [0] * (m + 1)
                for k in range(1, m + 1):
                    row[k] = (k * prev[k] if k < m else 0) + prev[k - 1]
                self._rows.append(row)
                self._bell.append(sum(row))

    def stirling(self, n: int, k: int) -> int:
        if n < 0 or k < 0:
            raise ValueError("n and k must be non-negative")
        if k > n:
            return 0
        self.extend(n)
        return self._rows[n][k]

    def bell(self, n: int) -> int:
        if n < 0:
            raise ValueError("n must be non-negative")
        self.extend(n)
        return self._bell[n]

    def row(self, n: int) -> tuple[int, ...]:
        self.extend(n)
        return tuple(self._rows[n])


_TABLE = CountTable()


def stirling(n: int, k: int) -> int:
    """Number of partitions of an n-set into exactly k non-empty blocks."""
    return _TABLE.stirling(n, k)


def bell(n: int) -> int:
    return _TABLE.bell(n)


def stirling_sum(n: int, k: int) -> int:
    """Partitions with at most ``k`` blocks: ``sum(S(n, i) for i in 0..k)``."""
    if k < 0:
        raise ValueError("k must be non-negative")
    return sum(stirling(n, i) for i in range(min(k, n) + 1))


def q_sum(n: int, u: int, v: int) -> int:
    """Partitions whose block count lies in ``u..v``."""
    if not 1 <= u <= v:
        raise ValueError(f"need 1 <= u <= v, got u={u}, v={v}")
    return sum(stirling(n, k) for k in range(u, min(v, n) + 1))


def set_sum(n: int, ks: Iterable[int]) -> int:
    """Partitions whose block count is one of ``ks``."""
    return sum(stirling(n, k) for k in set(ks) if k >= 0)


def count(n: int, spec: BlockCountSpec | None = None) -> int:
    """How many strings an enumeration of ``spec`` over ``n`` elements visits."""
    spec = spec or BlockCountSpec.unrestricted()
    p = spec.params
    if spec.regime is Regime.UNRESTRICTED:
        return bell(n)
    if spec.regime is Regime.AT_MOST:
        return stirling_sum(n, p[0]) - stirling(n, 0)
    if spec.regime is Regime.EXACTLY:
        return stirling(n, p[0])
    if spec.regime is Regime.RANGE:
        return q_sum(n, p[0], p[1])
    return set_sum(n, p)
