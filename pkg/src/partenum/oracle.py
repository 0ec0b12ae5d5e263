"""Brute-force reference enumeration, for tests.

Strings are grown one digit at a time, each prefix extended by every label
from 0 to one past its current maximum.  Nothing here touches the steppers or
the block-count lookup tables, so agreement between the two is meaningful.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from functools import lru_cache

from .blockcount import BlockCountSpec, Regime

MAX_N = 12


def _check(n: int) -> None:
    if not 1 <= n <= MAX_N:
        raise ValueError(f"oracle only handles 1 <= n <= {MAX_N}, got {n}")


def iter_all(n: int) -> Iterator[tuple[int, ...]]:
    """Every restricted growth string of length ``n``, depth first."""
    _check(n)
    stack = [((0,), 0)]
    while stack:
        prefix, top = stack.pop()
        if len(prefix) == n:
            yield prefix
            continue
        # pushed in descending order so the smallest label is popped first
        for d in range(top + 1, -1, -1):
            stack.append((prefix + (d,), max(top, d)))


@lru_cache(maxsize=None)
def generate_all(n: int) -> tuple[tuple[int, ...], ...]:
    """All strings of length ``n``, sorted."""
    return tuple(sorted(iter_all(n)))


def _admits(spec: BlockCountSpec, blocks: int) -> bool:
    p = spec.params
    if spec.regime is Regime.UNRESTRICTED:
        return True
    if spec.regime is Regime.AT_MOST:
        return blocks <= p[0]
    if spec.regime is Regime.EXACTLY:
        return blocks == p[0]
    if spec.regime is Regime.RANGE:
        return p[0] <= blocks <= p[1]
    return blocks in p


def filter_by_spec(strings: Sequence[tuple[int, ...]], spec: BlockCountSpec) -> list[tuple[int, ...]]:
    return [s for s in strings if _admits(spec, len(set(s)))]


@dataclass(frozen=True)
class OracleRun:
    n: int
    spec: BlockCountSpec
    strings: tuple[tuple[int, ...], ...]


def oracle_run(n: int, spec: BlockCountSpec | None = None) -> OracleRun:
    spec = spec or BlockCountSpec.unrestricted()
    return OracleRun(n, spec, tuple(filter_by_spec(generate_all(n), spec)))
