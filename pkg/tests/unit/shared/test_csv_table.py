"""Test CSV tables"""

import math

import numpy as np
import pytest

from shared.utils import CsvTable, format_cell, parse_float, read_rows


class TestFormatCell:
    """Test deterministic cell rendering"""
    
    @pytest.mark.parametrize("value, expected", [
        (None, ""),
        (float("nan"), ""),
        (True, "1"),
        (3, "3"),
        (0.1, "0.1"),
        (np.float64(0.25), "0.25"),
        (np.float64("nan"), ""),
        (np.float32(0.5), "0.5"),
        (np.int64(7), "7"),
        (np.bool_(False), "0"),
        ("warmup", "warmup"),
    ])
    def test_format_cell(self, value, expected):
        """Test each kind of value"""
        assert format_cell(value) == expected
    
    def test_parse_float_round_trips_repr(self):
        """Test floats survive the text form exactly"""
        value = 1.0 / 3.0
        
        assert parse_float(format_cell(value)) == value
        assert math.isnan(parse_float(""))
    
    def test_numpy_scalar_reads_back(self):
        """Test a NumPy scalar is written as a plain number parse_float accepts"""
        value = np.mean([0.1, 0.2, 0.4])
        
        cell = format_cell(value)
        
        assert "np." not in cell
        assert parse_float(cell) == float(value)


class TestCsvTable:
    """Test CsvTable writing"""
    
    def test_header_and_rows(self, tmp_path):
        """Test rows follow the header and missing cells are empty"""
        # Arrange
        table = CsvTable(tmp_path / "out" / "t.csv", ["a", "b"])
        
        # Act
        table.append({"a": 1, "b": 0.5})
        table.append({"a": 2})
        
        # Assert
        assert (tmp_path / "out" / "t.csv").read_text().splitlines() == ["a,b", "1,0.5", "2,"]
    
    def test_append_mode_keeps_rows(self, tmp_path):
        """Test reopening in append mode keeps earlier rows"""
        path = tmp_path / "t.csv"
        CsvTable(path, ["a"]).append({"a": 1})
        
        CsvTable(path, ["a"], append=True).append({"a": 2})
        
        assert [r["a"] for r in read_rows(path)] == ["1", "2"]
    
    def test_truncate_mode_resets(self, tmp_path):
        """Test opening without append starts a new table"""
        path = tmp_path / "t.csv"
        CsvTable(path, ["a"]).extend([{"a": 1}, {"a": 2}])
        
        CsvTable(path, ["a"])
        
        assert read_rows(path) == []
