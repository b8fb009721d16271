"""The brute-force Thue-Morse block-counting oracle."""

import pytest

from sternlike import (RangeError, eval_direct, factor_complexity, preset,
                       thue_morse_prefix, verify_y_preset)


def test_prefix_examples():
    assert list(thue_morse_prefix(8)) == [0, 1, 1, 0, 1, 0, 0, 1]
    assert list(thue_morse_prefix(1)) == [0]
    assert list(thue_morse_prefix(2)) == [0, 1]
    with pytest.raises(RangeError):
        thue_morse_prefix(0)


def test_prefix_satisfies_doubling_relations():
    word = thue_morse_prefix(4096)
    for i in range(2047):
        assert word[2 * i] == word[i]
        assert word[2 * i + 1] == 1 - word[i]


def test_factor_complexity_examples():
    word = thue_morse_prefix(2**17)
    assert factor_complexity(word, 1) == 2
    assert factor_complexity(word, 2) == 4
    assert factor_complexity(word, 4) == 10
    with pytest.raises(RangeError):
        factor_complexity(word, 0)
    with pytest.raises(RangeError):
        factor_complexity(word, len(word) + 1)


def test_complexity_growth_bounds():
    word = thue_morse_prefix(2**15)
    counts = [factor_complexity(word, ell) for ell in range(1, 24)]
    for prev, nxt in zip(counts, counts[1:]):
        assert prev <= nxt <= 2 * prev


def test_counts_match_y_preset_initial_segment():
    # the preset's derived init entries y(2)=6, y(3)=10 come from here
    word = thue_morse_prefix(2**14)
    spec = preset("tm_complexity_shift")
    for ell in range(1, 9):
        assert factor_complexity(word, ell) == eval_direct(spec, ell - 1)


def test_verify_y_preset_small():
    report = verify_y_preset(16)
    assert report.ok
    assert report.mismatches == ()
    assert report.unsaturated == ()
    assert report.prefix_length == 1024 * 16


def test_saturation_detects_short_prefixes():
    # a deliberately tiny prefix factor must trip the saturation check
    report = verify_y_preset(32, prefix_factor=2)
    assert report.unsaturated
