"""Tests for plain-text ring table files."""

from __future__ import annotations

import numpy as np
import pytest

from centrum.constructions import dump_table, load_table, parse_table, write_table
from centrum.core.errors import AxiomError, TableFormatError
from centrum.ring import validate

Z3_TABLE = """\
order 3
one 1
add
0 1 2
1 2 0
2 0 1
mul
0 0 0
0 1 2
0 2 1
"""


class TestParseTable:
    def test_minimal_file(self):
        R = parse_table(Z3_TABLE)
        assert R.order == 3
        assert R.names == ("0", "1", "2")

    def test_blank_lines_ignored(self):
        R = parse_table(Z3_TABLE.replace("\n", "\n\n"))
        assert R.order == 3

    def test_names_section(self):
        R = parse_table(Z3_TABLE + "names\nzero\none\nminus one\n")
        assert R.index_of("minusone") == 2

    def test_missing_header(self):
        with pytest.raises(TableFormatError):
            parse_table(Z3_TABLE.replace("order 3", "size 3"))

    def test_short_table(self):
        with pytest.raises(TableFormatError):
            parse_table(Z3_TABLE.replace("2 0 1\n", ""))

    def test_non_integer_entry(self):
        with pytest.raises(TableFormatError):
            parse_table(Z3_TABLE.replace("0 2 1", "0 2 x"))

    def test_zero_must_be_index_zero(self):
        text = Z3_TABLE.replace("add\n0 1 2\n1 2 0\n2 0 1", "add\n1 2 0\n0 1 2\n2 0 1")
        with pytest.raises(TableFormatError):
            parse_table(text)

    def test_wrong_name_count(self):
        with pytest.raises(TableFormatError):
            parse_table(Z3_TABLE + "names\na\nb\n")

    def test_trailing_garbage(self):
        with pytest.raises(TableFormatError):
            parse_table(Z3_TABLE + "extra\n")

    def test_axioms_still_checked(self):
        with pytest.raises(AxiomError):
            parse_table(Z3_TABLE.replace("one 1", "one 2"))


class TestWriteTable:
    @pytest.mark.parametrize("expr", ["Mat(2, Z 2)", "Triv(Z 4)", "Dorroh(Z 2, 6)"])
    def test_written_file_loads_back(self, make_ring, tmp_path, expr):
        R = make_ring(expr)
        path = write_table(R, tmp_path / "ring.txt")
        S = load_table(path)
        assert np.array_equal(S.add, R.add)
        assert np.array_equal(S.mul, R.mul)
        assert S.one == R.one
        assert S.names == R.names

    def test_table_expression(self, make_ring, tmp_path):
        path = write_table(make_ring("UT(2, Z 2)"), tmp_path / "ut2.txt")
        R = make_ring(f"Table({path})")
        assert R.order == 8
        assert not R.is_commutative

    def test_dump_is_text(self, make_ring):
        text = dump_table(make_ring("Z 2"))
        assert text.startswith("order 2\none 1\nadd\n")

    def test_zero_elsewhere_rejected(self, tmp_path):
        R = validate([[1, 0], [0, 1]], [[0, 1], [1, 1]], zero=1, one=0)
        with pytest.raises(TableFormatError):
            write_table(R, tmp_path / "bad.txt")
