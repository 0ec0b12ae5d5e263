from __future__ import annotations

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from partenum import oracle
from partenum.rgs import (
    block_count,
    format_blocks,
    format_digits,
    from_blocks,
    parse_digits,
    prefix_maxima,
    to_blocks,
    validate,
)


def digits(text):
    return tuple(int(ch) for ch in text)


@pytest.mark.parametrize(
    "text, expected",
    [("0012", True), ("0021", False), ("0", True), ("1", False)],
)
def test_validate_examples(text, expected):
    assert validate(digits(text)) is expected


def test_validate_rejects_empty_and_negative():
    assert not validate(())
    assert not validate((0, -1))
    assert not validate((0, 0.5))


@pytest.mark.parametrize("n", range(1, 8))
def test_validate_accepts_exactly_the_generated_strings(n):
    generated = set(oracle.generate_all(n))
    # every sequence over 0..n-1 of length n, growth property or not
    for cand in itertools.product(range(n), repeat=n):
        assert validate(cand) == (cand in generated)


@pytest.mark.parametrize("n", [8, 9, 10])
def test_validate_accepts_every_generated_string(n):
    assert all(validate(s) for s in oracle.iter_all(n))


@pytest.mark.parametrize("text, expected", [("0000", 1), ("0123", 4), ("01102", 3)])
def test_block_count_examples(text, expected):
    d = digits(text)
    assert block_count(d, prefix_maxima(d)) == expected
    assert block_count(d) == expected


@pytest.mark.parametrize("n", range(1, 9))
def test_block_count_is_distinct_labels(n):
    for s in oracle.iter_all(n):
        assert block_count(s) == len(set(s))


def test_prefix_maxima():
    assert prefix_maxima((0, 1, 1, 0, 2)) == [0, 0, 1, 1, 1]
    assert prefix_maxima((0,)) == [0]


@pytest.mark.parametrize(
    "text, blocks",
    [
        ("01102", ((1, 4), (2, 3), (5,))),
        ("0000", ((1, 2, 3, 4),)),
        ("0123", ((1,), (2,), (3,), (4,))),
    ],
)
def test_to_blocks_examples(text, blocks):
    assert to_blocks(digits(text)) == blocks


def test_from_blocks_examples():
    assert from_blocks([{2, 3}, {5}, {4, 1}]) == digits("01102")
    assert from_blocks([{1, 2, 3, 4}]) == digits("0000")


@pytest.mark.parametrize(
    "blocks",
    [
        [{1, 2}, set()],
        [{1, 2}, {2, 3}],
        [{1, 2}, {4}],
        [{0, 1}],
    ],
)
def test_from_blocks_rejects_bad_partitions(blocks):
    with pytest.raises(ValueError):
        from_blocks(blocks)


@pytest.mark.parametrize("n", range(1, 9))
def test_blocks_round_trip_exhaustive(n):
    for s in oracle.iter_all(n):
        blocks = to_blocks(s)
        assert from_blocks(blocks) == s
        assert sorted(e for b in blocks for e in b) == list(range(1, n + 1))
        assert [b[0] for b in blocks] == sorted(b[0] for b in blocks)


@st.composite
def growth_strings(draw, max_n=14):
    n = draw(st.integers(1, max_n))
    out = [0]
    top = 0
    for _ in range(n - 1):
        d = draw(st.integers(0, top + 1))
        out.append(d)
        top = max(top, d)
    return tuple(out)


@given(growth_strings())
def test_growth_strings_are_valid(s):
    assert validate(s)
    b = prefix_maxima(s)
    assert b[0] == 0
    assert all(b[i] == max(s[i - 1], b[i - 1]) for i in range(1, len(s)))


@given(growth_strings())
def test_round_trip_property(s):
    assert from_blocks(to_blocks(s)) == s
    assert block_count(s) == len(to_blocks(s))


@given(growth_strings(), st.randoms())
def test_from_blocks_ignores_order(s, rnd):
    blocks = [list(b) for b in to_blocks(s)]
    for b in blocks:
        rnd.shuffle(b)
    rnd.shuffle(blocks)
    assert from_blocks(blocks) == s


@given(growth_strings())
def test_text_forms_parse_back(s):
    assert parse_digits(format_digits(s)) == s
    if max(s) <= 9:
        assert parse_digits(format_digits(s, compact=True)) == s


def test_formats():
    d = digits("01102")
    assert format_digits(d) == "0,1,1,0,2"
    assert format_digits(d, compact=True) == "01102"
    assert format_blocks(d) == "{1,4}{2,3}{5}"
    with pytest.raises(ValueError):
        format_digits(tuple(range(11)), compact=True)
    with pytest.raises(ValueError):
        parse_digits("01x")
