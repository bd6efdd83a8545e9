"""
Tests for the .hg text format.
"""

import os
import tempfile
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spanhyper.core import (
    Graph,
    Hypergraph,
    atomic_write_text,
    format_hypergraph,
    parse_hypergraph,
    read_hypergraph,
    write_hypergraph,
)
from spanhyper.errors import ParseError
from spanhyper.generators import cube_hypergraph, gnp


class TestParse:
    """Test parsing of well-formed and malformed input."""

    def test_parse_basic(self):
        h = parse_hypergraph("3 4 2\n1 2 3\n2 3 4\n")
        assert h == Hypergraph(3, 4, ((1, 2, 3), (2, 3, 4)))

    def test_comments_and_blank_lines(self):
        h = parse_hypergraph("# a comment\n\n3 3 1\n# another\n1 2 3\n")
        assert h.m == 1

    def test_graph_file(self):
        g = parse_hypergraph("2 3 2\n1 2\n2 3\n")
        assert isinstance(g, Graph)

    def test_missing_header(self):
        with pytest.raises(ParseError):
            parse_hypergraph("# nothing here\n")

    def test_bad_header(self):
        with pytest.raises(ParseError) as exc:
            parse_hypergraph("3 4\n")
        assert exc.value.line == 1

    def test_edge_of_wrong_size_reports_line(self):
        with pytest.raises(ParseError) as exc:
            parse_hypergraph("3 4 2\n1 2 3\n1 2\n")
        assert exc.value.line == 3
        assert "line 3" in str(exc.value)

    def test_unsorted_edge(self):
        with pytest.raises(ParseError) as exc:
            parse_hypergraph("3 4 1\n3 2 1\n")
        assert exc.value.line == 2

    def test_vertex_out_of_range(self):
        with pytest.raises(ParseError):
            parse_hypergraph("3 4 1\n1 2 5\n")

    def test_duplicate_edge(self):
        with pytest.raises(ParseError) as exc:
            parse_hypergraph("3 4 2\n1 2 3\n1 2 3\n")
        assert exc.value.line == 3

    def test_non_integer_token(self):
        with pytest.raises(ParseError):
            parse_hypergraph("3 4 1\n1 two 3\n")

    def test_edge_count_mismatch(self):
        with pytest.raises(ParseError):
            parse_hypergraph("3 4 2\n1 2 3\n")

    def test_too_many_edges(self):
        with pytest.raises(ParseError):
            parse_hypergraph("3 4 1\n1 2 3\n2 3 4\n")


class TestWrite:
    """Test formatting and atomic writes."""

    def setup_method(self):
        self.tmp_dir = tempfile.mkdtemp()

    def test_format_with_metadata(self):
        text = format_hypergraph(Hypergraph(3, 3, ((1, 2, 3),)), {"seed": 7})
        assert text == "# seed=7\n3 3 1\n1 2 3\n"

    def test_write_then_read(self):
        h = cube_hypergraph(3, 2)
        path = write_hypergraph(h, os.path.join(self.tmp_dir, "q.hg"), {"type": "cube"})
        assert read_hypergraph(path) == h

    def test_atomic_write_leaves_no_temp_files(self):
        target = Path(self.tmp_dir) / "sub" / "out.txt"
        atomic_write_text(target, "first")
        atomic_write_text(target, "second")
        assert target.read_text() == "second"
        assert [p.name for p in target.parent.iterdir()] == ["out.txt"]

    def test_read_missing_file(self):
        with pytest.raises(FileNotFoundError):
            read_hypergraph(os.path.join(self.tmp_dir, "missing.hg"))


class TestFormatProperties:
    @settings(max_examples=100, deadline=None)
    @given(
        n=st.integers(min_value=2, max_value=9),
        r=st.integers(min_value=2, max_value=4),
        p=st.floats(min_value=0.0, max_value=1.0),
        seed=st.integers(min_value=0, max_value=2**32),
    )
    def test_formatted_text_parses_back(self, n, r, p, seed):
        if n < r:
            n = r
        h = gnp(n, r, p, seed)
        assert parse_hypergraph(format_hypergraph(h, {"seed": seed})) == h
