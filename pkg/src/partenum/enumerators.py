"""Resumable enumerators over restricted growth strings.

An :class:`EnumeratorState` holds the current string ``a``, its prefix maxima
``b`` and the constraint being enumerated.  The ``next_*`` functions move it
in place to the neighbouring admissible string and report whether they could;
:func:`advance` picks the right one for the state's constraint and direction:

==================  ==========  ==========
constraint          forward     reverse
==================  ==========  ==========
unrestricted        V           Z* (1, n)
at most k           W           Z* (1, k)
exactly k           Y           Z* (k, k)
kmin..kmax          Z           Z*
set K               U           U*
==================  ==========  ==========

A state is single-owner mutable data and is not safe to share between
threads while it is being advanced.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass

import numpy as np

from . import _kernels as _k
from .blockcount import BlockCountSpec, Regime
from .rgs import Digits, validate

FORWARD = "forward"
REVERSE = "reverse"

_DUMMY = np.zeros(1, dtype=np.int64)


@dataclass(frozen=True)
class OpCounters:
    """Work tallies accumulated by a state.

    ``digit_writes`` counts assignments to the string, ``b_writes`` to the
    prefix maxima; ``scan_steps`` counts evaluations of the leftward scan
    condition and ``fill_steps`` iterations of the rightward fill loops.
    ``peak_steps`` is the largest ``scan_steps + fill_steps`` spent by any
    single transition.
    """

    digit_writes: int = 0
    b_writes: int = 0
    scan_steps: int = 0
    fill_steps: int = 0
    next_calls: int = 0
    peak_steps: int = 0

    @classmethod
    def from_array(cls, cnt) -> OpCounters:
        return cls(*(int(x) for x in cnt[: _k.N_COUNTERS]))

    @property
    def writes_per_next(self) -> float:
        return self.digit_writes / self.next_calls if self.next_calls else 0.0


def _lookup_arrays(spec: BlockCountSpec, n: int):
    """One-based ``m`` and ``r`` tables as kernel arrays (0 marks undefined)."""
    m = np.zeros(n + 2, dtype=np.int64)
    r = np.zeros(n + 2, dtype=np.int64)
    for i, v in enumerate(spec.m_lookup(n), start=1):
        m[i] = v
    for i, v in enumerate(spec.r_lookup(n), start=1):
        r[i] = v or 0
    return m, r


class EnumeratorState:
    """Current position of an enumeration; see :func:`first`."""

    def __init__(self, n: int, spec: BlockCountSpec, direction: str, digits: Sequence[int] | None):
        if direction not in (FORWARD, REVERSE):
            raise ValueError(f"direction must be {FORWARD!r} or {REVERSE!r}")
        if n < 1:
            raise ValueError("n must be >= 1")
        self.n = n
        self.spec = spec
        self.direction = direction
        self.k_values = spec.k_values(n)
        self._a = np.zeros(n + 2, dtype=np.int64)
        self._b = np.zeros(n + 2, dtype=np.int64)
        self._cnt = _k.new_counters()
        self._m, self._r = _lookup_arrays(spec, n)
        self._kind, self._k1, self._k2 = self._plan()
        self.exhausted = digits is None
        if digits is not None:
            self._load(digits)

    def _plan(self):
        ks = self.k_values
        if not ks:
            return _k.KIND_V, 0, 0
        kmin, kmax = ks[0], ks[-1]
        regime = self.spec.regime
        if self.direction == REVERSE:
            if regime is Regime.SET:
                return _k.KIND_U_STAR, kmin, kmax
            return _k.KIND_Z_STAR, kmin, kmax
        if regime is Regime.UNRESTRICTED:
            return _k.KIND_V, 0, 0
        if regime is Regime.AT_MOST:
            return _k.KIND_W, kmax, 0
        if regime is Regime.EXACTLY:
            return _k.KIND_Y, kmax, 0
        if regime is Regime.RANGE:
            return _k.KIND_Z, kmin, kmax
        return _k.KIND_U, kmin, kmax

    def _load(self, digits: Sequence[int]) -> None:
        if len(digits) != self.n or not validate(digits):
            raise ValueError(f"not a restricted growth string of length {self.n}: {tuple(digits)}")
        a, b = self._a, self._b
        a[1 : self.n + 1] = digits
        for i in range(2, self.n + 2):
            b[i] = max(a[i - 1], b[i - 1])

    @classmethod
    def from_digits(
        cls,
        digits: Sequence[int],
        spec: BlockCountSpec | None = None,
        direction: str = FORWARD,
        strict: bool = True,
    ) -> EnumeratorState:
        """Place a state on an arbitrary string.

        With ``strict`` the string's block count must be admissible; turn it
        off to start a stepper from an intermediate string.
        """
        spec = spec or BlockCountSpec.unrestricted()
        state = cls(len(digits), spec, direction, digits)
        if strict and state.block_count not in state.k_values:
            raise ValueError(f"{tuple(digits)} has {state.block_count} blocks, outside {spec}")
        return state

    @property
    def algorithm(self) -> str:
        """Name of the stepper :func:`advance` uses, e.g. ``"Y"``."""
        return _k.KIND_NAMES[self._kind]

    @property
    def status(self) -> str:
        return "exhausted" if self.exhausted else "active"

    @property
    def digits(self) -> Digits:
        return tuple(self._a[1 : self.n + 1].tolist())

    @property
    def maxima(self) -> tuple[int, ...]:
        """Prefix maxima ``b[1..n]`` as kept by the steppers."""
        return tuple(self._b[1 : self.n + 1].tolist())

    @property
    def block_count(self) -> int:
        n = self.n
        return int(max(self._a[n], self._b[n])) + 1

    @property
    def counters(self) -> OpCounters:
        return OpCounters.from_array(self._cnt)

    def reset_counters(self) -> None:
        self._cnt[:] = 0

    def advance(self) -> bool:
        return advance(self)

    def __iter__(self) -> Iterator[Digits]:
        """Yield the current string, then each successor until exhausted."""
        while not self.exhausted:
            yield self.digits
            self.advance()

    def _step(self, kind: int, k1: int = 0, k2: int = 0, m=_DUMMY, r=_DUMMY) -> bool:
        if self.exhausted:
            return False
        moved = _k.step(kind, self._a, self._b, self.n, k1, k2, m, r, self._cnt)
        if not moved:
            self.exhausted = True
        return bool(moved)

    def to_token(self) -> str:
        """Serialise as ``n;regime;params;direction;digits``.

        The prefix maxima are not stored; they follow from the digits.
        """
        return ";".join(
            [
                str(self.n),
                self.spec.regime.value,
                ",".join(map(str, self.spec.params)),
                self.direction,
                ",".join(map(str, self.digits)),
            ]
        )

    @classmethod
    def from_token(cls, token: str) -> EnumeratorState:
        """Inverse of :meth:`to_token`; the state sits on the stored string."""
        try:
            n_text, regime, params, direction, digits = token.strip().split(";")
            n = int(n_text)
            spec = BlockCountSpec(Regime(regime), tuple(int(p) for p in params.split(",") if p))
            values = tuple(int(d) for d in digits.split(","))
        except ValueError as exc:
            raise ValueError(f"malformed resume token {token!r}: {exc}") from None
        if len(values) != n:
            raise ValueError(f"resume token holds {len(values)} digits for n={n}")
        return cls.from_digits(values, spec, direction)

    def __repr__(self) -> str:
        return (
            f"EnumeratorState(n={self.n}, spec={self.spec}, direction={self.direction!r}, "
            f"digits={self.digits}, status={self.status!r})"
        )


def first(n: int, spec: BlockCountSpec | None = None, direction: str = FORWARD) -> EnumeratorState:
    """State on the first string of the enumeration.

    Forward starts at ``0^(n-kmin) 0 1 .. kmin-1``, reverse at
    ``0 1 .. kmax-1`` padded with ``kmax-1``; ``kmin``/``kmax`` are the
    extreme admissible block counts.  With no admissible count the state is
    born exhausted.
    """
    spec = spec or BlockCountSpec.unrestricted()
    ks = spec.k_values(n)
    if not ks:
        return EnumeratorState(n, spec, direction, None)
    if direction == REVERSE:
        kmax = ks[-1]
        digits = list(range(kmax)) + [kmax - 1] * (n - kmax)
    else:
        kmin = ks[0]
        digits = [0] * (n - kmin) + list(range(kmin))
    return EnumeratorState(n, spec, direction, digits)


def next_v(state: EnumeratorState) -> bool:
    return state._step(_k.KIND_V)


def next_w(state: EnumeratorState, k: int) -> bool:
    return state._step(_k.KIND_W, k)


def next_x(state: EnumeratorState, k: int) -> bool:
    return state._step(_k.KIND_X, k)


def next_y(state: EnumeratorState, k: int) -> bool:
    return state._step(_k.KIND_Y, k)


def skip_to_k_blocks(state: EnumeratorState, k: int) -> None:
    """Apply only the repair half of Y to a string with fewer than k blocks."""
    steps = _k.skip_to_k_blocks(state._a, state._b, state.n, k)
    for idx in (_k.DIGIT_WRITES, _k.B_WRITES, _k.FILL_STEPS):
        state._cnt[idx] += steps


def next_z(state: EnumeratorState, kmin: int, kmax: int) -> bool:
    return state._step(_k.KIND_Z, kmin, kmax)


def next_z_star(state: EnumeratorState, kmin: int, kmax: int) -> bool:
    return state._step(_k.KIND_Z_STAR, kmin, kmax)


def _set_tables(state: EnumeratorState, spec: BlockCountSpec):
    ks = spec.k_values(state.n)
    if not ks:
        raise ValueError(f"{spec} admits no block count for n={state.n}")
    if spec == state.spec:
        return ks, state._m, state._r
    return (ks, *_lookup_arrays(spec, state.n))


def next_u(state: EnumeratorState, spec: BlockCountSpec) -> bool:
    ks, m, r = _set_tables(state, spec)
    return state._step(_k.KIND_U, ks[0], ks[-1], m, r)


def next_u_star(state: EnumeratorState, spec: BlockCountSpec) -> bool:
    ks, m, r = _set_tables(state, spec)
    return state._step(_k.KIND_U_STAR, ks[0], ks[-1], m, r)


def advance(state: EnumeratorState) -> bool:
    """Move to the next string in the state's own order."""
    return state._step(state._kind, state._k1, state._k2, state._m, state._r)


def iter_partitions(state: EnumeratorState, batch_size: int = 1024) -> Iterator[Digits]:
    """Yield the current string and every later one, consuming ``state``.

    Strings are produced by the compiled stepper in batches, so while the
    generator is suspended the state may be up to ``batch_size - 1`` strings
    ahead of what has been yielded.  Build resume tokens from the yielded
    strings, not from the state.
    """
    if state.exhausted:
        return
    out = np.empty((batch_size, state.n), dtype=np.int64)
    while True:
        rows, done = _k.fill_batch(
            state._kind, state._a, state._b, state.n, state._k1, state._k2,
            state._m, state._r, state._cnt, out,
        )
        for row in out[:rows].tolist():
            yield tuple(row)
        if done:
            state.exhausted = True
            return
        if not state._step(state._kind, state._k1, state._k2, state._m, state._r):
            return


def partitions(
    n: int, spec: BlockCountSpec | None = None, reverse: bool = False
) -> Iterator[Digits]:
    """All restricted growth strings of length ``n`` admitted by ``spec``,
    in lexicographic order (or its reverse)."""
    return iter_partitions(first(n, spec, REVERSE if reverse else FORWARD))


def drain(state: EnumeratorState, algorithm: str | None = None, checksum: bool = False):
    """Run ``state`` to exhaustion inside compiled code without yielding.

    Returns the number of strings visited (the current one included) or, with
    ``checksum``, a ``(count, checksum)`` pair whose checksum depends only on
    the visited sequence.  ``algorithm`` swaps in another stepper by name
    ("X" on an exactly-k state, say); it reuses the state's parameters.
    Per-transition peak tracking is skipped here.
    """
    kind = state._kind if algorithm is None else _k.KIND_NAMES.index(algorithm)
    if state.exhausted:
        return (0, 0) if checksum else 0
    run = _k.full_run if checksum else _k.drain
    result = run(kind, state._a, state._b, state.n, state._k1, state._k2, state._m, state._r, state._cnt)
    state.exhausted = True
    if checksum:
        return int(result[0]), int(result[1])
    return int(result)
