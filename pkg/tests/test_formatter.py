"""Tests for the output formatter.

Tests the OutputFormatter that renders statistics rows, polynomials and
check reports as text, JSON lines or CSV.
"""

import json

import pytest

from avoid321.components.formatter import OutputFormat, OutputFormatter
from avoid321.components.permutation import DescentSet, parse_permutation
from avoid321.components.polynomial import parse_poly
from avoid321.models.results import CheckReport


@pytest.fixture
def rows():
    return [
        {"perm": parse_permutation("25134"), "ldes": 2, "ides": DescentSet.from_indices([1, 4], 5)},
        {"perm": parse_permutation("12345"), "ldes": 0, "ides": DescentSet(0, 5)},
    ]


@pytest.fixture
def reports():
    return [
        CheckReport("dyck", (1, 6), "pass", elapsed_ms=2.5),
        CheckReport("hilbert", (1, 3), "fail", witness={"n": 3}, elapsed_ms=1.0),
    ]


class TestRecords:
    """Test statistics rows."""

    def test_text(self, rows):
        out = "".join(OutputFormatter("text").stream_records(rows, ["perm", "ldes", "ides"]))
        assert out.splitlines() == ["25134\t2\t{1,4}", "12345\t0\t{}"]

    def test_json(self, rows):
        out = "".join(OutputFormatter(OutputFormat.JSON).stream_records(rows, ["perm", "ides"]))
        first = json.loads(out.splitlines()[0])
        assert first == {"perm": [2, 5, 1, 3, 4], "ides": [1, 4]}

    def test_csv(self, rows):
        out = "".join(OutputFormatter("csv").stream_records(rows, ["perm", "ides"]))
        assert out.splitlines() == ["perm,ides", "25134,1;4", "12345,"]

    def test_stream_yields_header_first(self, rows):
        lines = list(OutputFormatter("csv").stream_records(iter(rows), ["perm"]))
        assert lines == ["perm\n", "25134\n", "12345\n"]

    def test_unknown_format(self):
        with pytest.raises(ValueError):
            OutputFormatter("xml")


class TestPolynomial:
    """Test polynomial output."""

    def test_text(self):
        assert OutputFormatter().polynomial(parse_poly("t1*x*y*z + z^2")) == "z^2 + t1*x*y*z\n"

    def test_json(self):
        out = OutputFormatter("json").polynomial(parse_poly("1 - y"), n=2)
        record = json.loads(out)
        assert record["poly"] == "1 - y"
        assert record["n"] == 2

    def test_csv_has_one_row_per_term(self):
        out = OutputFormatter("csv").polynomial(parse_poly("z^2 + t1*x*y*z"))
        assert out.splitlines() == ["coeff,t1,x,y,z", "1,0,0,0,2", "1,1,1,1,1"]


class TestReports:
    """Test check report output."""

    def test_json_lines(self, reports):
        lines = OutputFormatter("json").reports(reports).splitlines()
        assert json.loads(lines[0])["ms"] == 2.5
        assert json.loads(lines[1])["witness"] == {"n": 3}

    def test_no_timing(self, reports):
        out = OutputFormatter("json", include_timing=False).reports(reports)
        assert all("ms" not in json.loads(line) for line in out.splitlines())

    def test_text(self, reports):
        lines = OutputFormatter("text", include_timing=False).reports(reports).splitlines()
        assert lines == ["dyck\t1\t6\tpass\t", 'hilbert\t1\t3\tfail\t{"n": 3}']

    def test_csv(self, reports):
        lines = OutputFormatter("csv").reports(reports).splitlines()
        assert lines[0] == "check,n_min,n_max,status,witness,ms"
        assert lines[1] == "dyck,1,6,pass,,2.5"
