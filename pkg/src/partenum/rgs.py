"""Restricted growth strings and their block partitions.

A partition of ``{1, ..., n}`` is stored as a tuple of block labels
``a[0..n-1]`` with ``a[0] == 0`` and every label at most one more than the
largest label before it.  Element ``i`` (one-based) sits in block ``a[i-1]``.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from numbers import Integral

Digits = tuple[int, ...]


def validate(digits: Sequence[int]) -> bool:
    """Return True if ``digits`` is a restricted growth string."""
    if len(digits) == 0 or digits[0] != 0:
        return False
    top = 0
    for d in digits[1:]:
        if not isinstance(d, Integral) or d < 0 or d > top + 1:
            return False
        top = max(top, d)
    return True


def prefix_maxima(digits: Sequence[int]) -> list[int]:
    """``b[i] = max(digits[:i])`` for ``i >= 1`` and ``b[0] = 0``."""
    b = [0] * len(digits)
    for i in range(1, len(digits)):
        b[i] = max(digits[i - 1], b[i - 1])
    return b


def block_count(digits: Sequence[int], maxima: Sequence[int] | None = None) -> int:
    if maxima is None:
        maxima = prefix_maxima(digits)
    return max(digits[-1], maxima[-1]) + 1


def to_blocks(digits: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    """Blocks of one-based elements, ordered by their least element.

    >>> to_blocks((0, 1, 1, 0, 2))
    ((1, 4), (2, 3), (5,))
    """
    blocks: list[list[int]] = []
    for element, label in enumerate(digits, start=1):
        if label == len(blocks):
            blocks.append([element])
        else:
            blocks[label].append(element)
    return tuple(tuple(block) for block in blocks)


def from_blocks(blocks: Iterable[Iterable[int]]) -> Digits:
    """Inverse of :func:`to_blocks`; block and element order are irrelevant.

    Raises ValueError unless the blocks are non-empty, pairwise disjoint and
    cover ``1..n`` exactly.
    """
    ordered = []
    for block in blocks:
        members = sorted(block)
        if not members:
            raise ValueError("empty block")
        ordered.append(members)
    ordered.sort(key=lambda members: members[0])
    n = sum(len(members) for members in ordered)
    digits = [-1] * n
    for label, members in enumerate(ordered):
        for element in members:
            if not 1 <= element <= n:
                raise ValueError(f"element {element} outside 1..{n}")
            if digits[element - 1] != -1:
                raise ValueError(f"element {element} appears in two blocks")
            digits[element - 1] = label
    return tuple(digits)


def format_digits(digits: Sequence[int], compact: bool = False) -> str:
    """Comma-joined text form, or concatenated digits when ``compact``."""
    if compact:
        if any(d > 9 for d in digits):
            raise ValueError("compact form needs every label <= 9")
        return "".join(map(str, digits))
    return ",".join(map(str, digits))


def format_blocks(digits: Sequence[int]) -> str:
    """Render as ``{1,4}{2,3}{5}``."""
    return "".join("{" + ",".join(map(str, block)) + "}" for block in to_blocks(digits))


def parse_digits(text: str) -> Digits:
    """Accept either ``"0,1,1,0,2"`` or the compact ``"01102"``."""
    text = text.strip()
    if "," in text:
        return tuple(int(part) for part in text.split(","))
    if not text.isdigit():
        raise ValueError(f"not a growth string: {text!r}")
    return tuple(int(ch) for ch in text)
