#!/usr/bin/env python3
"""
Pruebas de la salida de registros en CSV, JSON y SVG.
"""
import pytest

from app.emit import convert, emit, read_records, records_from_csv, records_from_json, records_to_csv, records_to_json
from app.sweep import ExperimentRecord
from app.utils.config.config_constants import CSV_COLUMNS
from app.utils.error_handler import SpecParseError


@pytest.fixture
def records():
    rows = []
    for side, vc in (("yes", 2), ("no", None)):
        for m, rate in ((10, 0.1), (40, 0.9666666666666667)):
            rows.append(ExperimentRecord(**{
                "class": "interval_union", "params": f"k=1;side={side}", "n": 20, "vc": vc, "lvc": vc,
                "eps": 0.1, "m": m, "trials": 30, "accept_rate": rate, "ci_low": rate / 2,
                "ci_high": min(1.0, rate + 0.03), "seed": 7,
            }))
    return rows


class TestCsv:
    """CSV con columnas fijas"""

    def test_empty_is_header_only(self):
        assert records_to_csv([]) == ",".join(CSV_COLUMNS) + "\n"
        assert records_from_csv(records_to_csv([])) == []

    def test_missing_dimensions_are_empty_cells(self, records):
        lines = records_to_csv(records).splitlines()
        assert lines[3].split(",")[3:5] == ["", ""]

    def test_csv_json_csv_is_identical(self, records):
        text = records_to_csv(records)
        again = records_to_csv(records_from_json(records_to_json(records_from_csv(text))))
        assert again == text

    def test_bad_header(self):
        with pytest.raises(SpecParseError):
            records_from_csv("a,b\n1,2\n")

    def test_bad_cell(self, records):
        text = records_to_csv(records).replace(",30,", ",thirty,", 1)
        with pytest.raises(SpecParseError):
            records_from_csv(text)


class TestJson:
    """JSON como lista de objetos"""

    def test_not_a_list(self):
        with pytest.raises(SpecParseError):
            records_from_json('{"class": "x"}')

    def test_invalid(self):
        with pytest.raises(SpecParseError):
            records_from_json("[")


class TestEmit:
    """Escritura a disco y conversión"""

    def test_unknown_format(self, records, tmp_path):
        with pytest.raises(ValueError):
            emit(records, "xml", str(tmp_path / "out.xml"))

    def test_svg_written(self, records, tmp_path):
        path = tmp_path / "rates.svg"
        emit(records, "svg", str(path))
        assert "<svg" in path.read_text(encoding="utf-8")

    def test_svg_needs_records(self, tmp_path):
        with pytest.raises(ValueError):
            emit([], "svg", str(tmp_path / "empty.svg"))

    def test_convert_csv_to_json_and_back(self, records, tmp_path):
        src = tmp_path / "records.csv"
        emit(records, "csv", str(src))
        assert convert(str(src), "json", str(tmp_path / "records.json")) == 4
        assert convert(str(tmp_path / "records.json"), "csv", str(tmp_path / "back.csv")) == 4
        assert (tmp_path / "back.csv").read_text(encoding="utf-8") == src.read_text(encoding="utf-8")

    def test_read_records(self, records, tmp_path):
        path = tmp_path / "records.json"
        emit(records, "json", str(path))
        assert [r.model_dump() for r in read_records(str(path))] == [r.model_dump() for r in records]
