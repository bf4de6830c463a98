import json

import pytest
from hypothesis import given

from flowerkit.constructions import fano
from flowerkit.core import (
    SetFamily, from_json, from_text, parse_family, read_family, to_json, to_text, write_family,
)
from flowerkit.errors import ParseError

from oracles import families

FANO_TEXT = """7 3
1 2 4
2 3 5
3 4 6
1 5 6
1 3 7
4 5 7
2 6 7
"""


def test_fano_text_is_frozen():
    assert to_text(fano()) == FANO_TEXT


@given(families(max_n=10, uniform=False))
def test_text_roundtrip(F):
    assert from_text(to_text(F)) == F


@given(families(max_n=10, uniform=False))
def test_json_roundtrip(F):
    G = parse_family(json.dumps(to_json(F)))
    assert G == F and G.r == F.r


def test_comments_and_blank_lines():
    text = "# fano\n7 3\n\n1 2 4  # first line\n1 3 7\n"
    assert from_text(text).to_lists() == [[1, 2, 4], [1, 3, 7]]


@pytest.mark.parametrize("text, line", [
    ("7 3\n1 2 x\n", 2),
    ("7 3\n1 2 4\n1 2 9\n", 3),
    ("7 3\n1 2\n", 2),
    ("7 3\n2 1 4\n", 2),
    ("7\n", 1),
    ("", 1),
])
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(ParseError) as exc:
        from_text(text)
    assert exc.value.line == line
    assert str(exc.value).startswith(f"line {line}:")


def test_bad_json():
    with pytest.raises(ParseError):
        parse_family('{"n": 3, "edges": [[1, 4]]}')
    with pytest.raises(ParseError):
        parse_family('{"n": 3,')
    with pytest.raises(ParseError):
        from_json({"edges": []})


def test_mixed_sizes_use_r_zero(tmp_path):
    F = SetFamily.of(4, [1], [2, 3])
    path = tmp_path / "mixed.txt"
    write_family(F, path)
    assert path.read_text().splitlines()[0] == "4 0"
    assert read_family(path) == F
