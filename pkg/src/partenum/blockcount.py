"""Which block counts an enumeration admits."""

from __future__ import annotations

import enum
from collections.abc import Iterable
from dataclasses import dataclass


class Regime(str, enum.Enum):
    UNRESTRICTED = "unrestricted"
    AT_MOST = "at-most"
    EXACTLY = "exactly"
    RANGE = "range"
    SET = "set"


_ARITY = {
    Regime.UNRESTRICTED: 0,
    Regime.AT_MOST: 1,
    Regime.EXACTLY: 1,
    Regime.RANGE: 2,
}


@dataclass(frozen=True)
class BlockCountSpec:
    """A block-count constraint, independent of ``n``.

    Build one with the classmethods rather than the constructor.  Values that
    exceed ``n`` are clamped away by :meth:`k_values`; values below 1, an
    empty set, or ``kmin > kmax`` are rejected here.
    """

    regime: Regime = Regime.UNRESTRICTED
    params: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "regime", Regime(self.regime))
        params = tuple(int(p) for p in self.params)
        if self.regime is Regime.SET:
            params = tuple(sorted(set(params)))
            if not params:
                raise ValueError("block-count set is empty")
        elif len(params) != _ARITY[self.regime]:
            raise ValueError(
                f"{self.regime.value} takes {_ARITY[self.regime]} parameter(s), got {len(params)}"
            )
        if any(p < 1 for p in params):
            raise ValueError(f"block counts must be >= 1, got {params}")
        if self.regime is Regime.RANGE and params[0] > params[1]:
            raise ValueError(f"kmin {params[0]} exceeds kmax {params[1]}")
        object.__setattr__(self, "params", params)

    @classmethod
    def unrestricted(cls) -> BlockCountSpec:
        return cls(Regime.UNRESTRICTED)

    @classmethod
    def at_most(cls, k: int) -> BlockCountSpec:
        return cls(Regime.AT_MOST, (k,))

    @classmethod
    def exactly(cls, k: int) -> BlockCountSpec:
        return cls(Regime.EXACTLY, (k,))

    @classmethod
    def between(cls, kmin: int, kmax: int) -> BlockCountSpec:
        return cls(Regime.RANGE, (kmin, kmax))

    @classmethod
    def in_set(cls, ks: Iterable[int]) -> BlockCountSpec:
        return cls(Regime.SET, tuple(ks))

    def k_values(self, n: int) -> tuple[int, ...]:
        """Admissible block counts for an ``n``-element set, ascending."""
        p = self.params
        if self.regime is Regime.UNRESTRICTED:
            return tuple(range(1, n + 1))
        if self.regime is Regime.AT_MOST:
            return tuple(range(1, min(p[0], n) + 1))
        if self.regime is Regime.EXACTLY:
            return p if p[0] <= n else ()
        if self.regime is Regime.RANGE:
            return tuple(range(p[0], min(p[1], n) + 1))
        return tuple(k for k in p if k <= n)

    def m_lookup(self, n: int) -> list[int]:
        """``m[i-1]`` is the smallest admissible count ``>= i``, for ``i`` in
        ``1..max(k_values)``."""
        ks = self.k_values(n)
        if not ks:
            return []
        m = []
        j = 0
        for i in range(1, ks[-1] + 1):
            while ks[j] < i:
                j += 1
            m.append(ks[j])
        return m

    def r_lookup(self, n: int) -> list[int | None]:
        """``r[i-1]`` is the largest admissible count ``<= i``, for ``i`` in
        ``1..n``; None below the smallest admissible count."""
        ks = self.k_values(n)
        r: list[int | None] = []
        best = None
        j = 0
        for i in range(1, n + 1):
            while j < len(ks) and ks[j] <= i:
                best = ks[j]
                j += 1
            r.append(best)
        return r

    def is_contiguous(self, n: int) -> bool:
        ks = self.k_values(n)
        return bool(ks) and ks[-1] - ks[0] + 1 == len(ks)

    def __str__(self) -> str:
        return self.regime.value + (":" + ",".join(map(str, self.params)) if self.params else "")
