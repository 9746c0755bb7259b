import pytest

from braidminors.braidword import Band, BandWord, PositiveWord
from braidminors.parser import (
    BraidExponentError,
    BraidIndexError,
    BraidSyntaxError,
    parse_braid,
    parse_braid_lines,
)
from conftest import FIG1


def test_fig1_word():
    w = parse_braid(FIG1)
    assert w.n == 7
    assert w.letters == (
        Band(4, 7), Band(3, 5), Band(2, 4), Band(1, 3), Band(2, 6), Band(5, 7), Band(1, 6)
    )


def test_single_generator():
    assert parse_braid("B2: s1") == BandWord(2, (Band(1, 2),))


def test_group_power_expands():
    w = parse_braid("B5: (s1 s2 s3 s4)^3")
    assert len(w) == 12
    assert w.is_positive
    assert PositiveWord.from_indices(5, [1, 2, 3, 4] * 3) == w


def test_nested_groups_and_mixed_letters():
    w = parse_braid("B4: ((s1 b(1,3))^2 s3)^2")
    assert [str(b) for b in w] == ["s1", "b(1,3)", "s1", "b(1,3)", "s3"] * 2


def test_empty_word_and_comments():
    assert parse_braid("B1:") == BandWord(1, ())
    assert parse_braid("B3:   # nothing here") == BandWord(3, ())
    assert parse_braid("B3: s1 # s2 ignored") == BandWord(3, (Band(1, 2),))


@pytest.mark.parametrize(
    "text, exc, column",
    [
        ("B3: s3", BraidIndexError, 5),
        ("B3: b(2,2)", BraidIndexError, 5),
        ("B3: b(0,2)", BraidIndexError, 5),
        ("B3: s0", BraidIndexError, 5),
        ("B3: (s1)^0", BraidExponentError, 8),
        ("B3: s1 x", BraidSyntaxError, 8),
        ("s1 s2", BraidSyntaxError, 1),
        ("B3: (s1 s2", BraidSyntaxError, 5),
        ("B3: s1)", BraidSyntaxError, 7),
        ("B0:", BraidIndexError, 1),
    ],
)
def test_errors_report_position(text, exc, column):
    with pytest.raises(exc) as info:
        parse_braid(text)
    assert info.value.line == 1
    assert info.value.column == column


def test_file_lines_keep_line_numbers():
    body = "# family\nB2: s1\n\nB2: s1 s1  # two\nB2: s2\n"
    with pytest.raises(BraidSyntaxError) as info:
        parse_braid_lines(body)
    assert info.value.line == 5
    assert parse_braid_lines(body.rsplit("B2: s2", 1)[0]) == [
        parse_braid("B2: s1"),
        parse_braid("B2: s1 s1"),
    ]
