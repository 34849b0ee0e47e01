"""Text formats round-trip and report the offending line on errors."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cdindex.arrangement_euclid import AffineArrangement
from cdindex.arrangement_toric import ToricArrangement
from cdindex.corpus import random_affine_arrangement, random_graph, random_toric_arrangement
from cdindex.fileformats import (
    FormatError,
    format_affine,
    format_graph,
    format_poset,
    format_toric,
    load,
    parse_text,
)
from cdindex.graphs import SimpleGraph
from cdindex.poset import GradedPoset, ab_index, random_graded_poset

seeds = st.integers(0, 10**6)


def test_shipped_data_files_load(data_dir):
    kinds = {
        "toric": ToricArrangement,
        "affine": AffineArrangement,
        "poset": GradedPoset,
        "graph": SimpleGraph,
    }
    files = sorted(data_dir.iterdir())
    assert files
    for path in files:
        assert isinstance(load(path), kinds[path.suffix[1:]])


@settings(max_examples=20, deadline=None)
@given(seeds)
def test_round_trips(seed):
    A = random_affine_arrangement(seed)
    B = parse_text(format_affine(A))
    assert B.hyperplanes == A.hyperplanes
    T = random_toric_arrangement(seed)
    assert parse_text(format_toric(T)).hyperplanes == T.hyperplanes
    G = random_graph(seed, connected=False)
    assert parse_text(format_graph(G)) == G
    P = random_graded_poset(seed)
    assert ab_index(parse_text(format_poset(P))) == ab_index(P)


@pytest.mark.parametrize(
    "text, where",
    [
        ("", "empty"),
        ("polytope 3\n", "line 1"),
        ("affine 2\n1 0 | 0\n1 | 0\n", "line 3"),
        ("affine 2\n1 0 0\n", "line 2"),
        ("affine 2\n# comment\n0 0 | 1\n", "line 3"),
        ("toric 2\n1 0 | 1/0\n", "line 2"),
        ("toric 2\n1 0 | 0\n2 0 | 2\n", "line 3"),
        ("graph 3\n1 4\n", "line 2"),
        ("graph 3\n1 x\n", "line 2"),
        ("poset 2 1\na 0\nb 1\na < c\n", "line 4"),
        ("poset 3 2\na 0\nb 1\nc 2\na < c\n", "line 5"),
        ("poset 2 1\na 0\n", "line 1"),
    ],
)
def test_errors_name_the_line(text, where):
    with pytest.raises(FormatError) as info:
        parse_text(text)
    assert where in str(info.value)


def test_comments_and_blank_lines_ignored():
    G = parse_text("# a path\n\ngraph 3  # three vertices\n1 2\n\n2 3\n")
    assert G == SimpleGraph.path(3)
