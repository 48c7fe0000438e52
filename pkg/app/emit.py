"""
Experiment record output: CSV, JSON and a rate-vs-m SVG chart.

CSV columns are fixed (CSV_COLUMNS); floats are written with repr so a
csv → json → csv pass reproduces the data rows byte for byte. Missing
vc / lvc are empty cells.
"""
import csv
import io
import json
from typing import Dict, Iterable, List, Optional

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from app.sweep import ExperimentRecord
from app.utils.config.config_constants import CSV_COLUMNS, FORMAT_CSV, FORMAT_JSON, FORMAT_SVG, VALID_FORMATS
from app.utils.error_handler import SpecParseError
from app.utils.logger_config import get_logger

logger = get_logger()

_INT_COLUMNS = {"n", "m", "trials", "seed"}
_OPTIONAL_INT_COLUMNS = {"vc", "lvc"}
_FLOAT_COLUMNS = {"eps", "accept_rate", "ci_low", "ci_high"}


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)
    return str(value)


def record_row(record: ExperimentRecord) -> Dict[str, object]:
    data = record.model_dump(by_alias=True)
    return {col: data[col] for col in CSV_COLUMNS}


def _parse_row(row: Dict[str, str]) -> ExperimentRecord:
    missing = [c for c in CSV_COLUMNS if c not in row]
    if missing:
        raise SpecParseError(f"record is missing columns {missing}")
    values: Dict[str, object] = {}
    try:
        for col in CSV_COLUMNS:
            raw = row[col]
            if col in _INT_COLUMNS:
                values[col] = int(raw)
            elif col in _OPTIONAL_INT_COLUMNS:
                values[col] = None if raw in ("", None) else int(raw)
            elif col in _FLOAT_COLUMNS:
                values[col] = float(raw)
            else:
                values[col] = str(raw)
    except (TypeError, ValueError) as exc:
        raise SpecParseError(f"bad record row {row}: {exc}")
    return ExperimentRecord(**values)


# ========== CSV ==========

def records_to_csv(records: Iterable[ExperimentRecord]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for record in records:
        row = record_row(record)
        writer.writerow([_cell(row[col]) for col in CSV_COLUMNS])
    return buffer.getvalue()


def records_from_csv(text: str) -> List[ExperimentRecord]:
    reader = csv.DictReader(io.StringIO(text))
    if reader.fieldnames is None:
        return []
    if list(reader.fieldnames) != CSV_COLUMNS:
        raise SpecParseError(f"unexpected CSV header {reader.fieldnames}; expected {CSV_COLUMNS}")
    return [_parse_row(row) for row in reader]


# ========== JSON ==========

def records_to_json(records: Iterable[ExperimentRecord]) -> str:
    return json.dumps([record_row(r) for r in records], indent=2) + "\n"


def records_from_json(text: str) -> List[ExperimentRecord]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecParseError(f"invalid JSON records: {exc}")
    if not isinstance(data, list):
        raise SpecParseError("JSON records must be a list of objects")
    return [_parse_row({k: ("" if v is None else v) for k, v in item.items()}) for item in data]


# ========== SVG ==========

def records_to_svg(records: List[ExperimentRecord], path: str, title: Optional[str] = None) -> None:
    """Acceptance rate vs m, one line per side, with the Wilson band."""
    if not records:
        raise ValueError("svg output needs at least one record")
    series: Dict[str, List[ExperimentRecord]] = {}
    for r in records:
        series.setdefault(r.side or r.params, []).append(r)
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    try:
        for label, rows in series.items():
            rows = sorted(rows, key=lambda r: r.m)
            ms = [r.m for r in rows]
            ax.plot(ms, [r.accept_rate for r in rows], marker="o", label=label)
            ax.fill_between(ms, [r.ci_low for r in rows], [r.ci_high for r in rows], alpha=0.2)
        ax.set_xlabel("m")
        ax.set_ylabel("accept rate")
        ax.set_ylim(-0.02, 1.02)
        ax.set_title(title or records[0].class_name)
        ax.legend(loc="best")
        fig.savefig(path, format="svg", metadata={"Date": None})
    finally:
        plt.close(fig)


# ========== DESPACHO ==========

def emit(records: List[ExperimentRecord], fmt: str, path: str) -> None:
    """
    Write records in the given format.

    Raises:
        ValueError: unknown format, or svg with no records
    """
    if fmt not in VALID_FORMATS:
        raise ValueError(f"unknown format {fmt!r}; expected one of {sorted(VALID_FORMATS)}")
    if fmt == FORMAT_SVG:
        records_to_svg(records, path)
    else:
        text = records_to_csv(records) if fmt == FORMAT_CSV else records_to_json(records)
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    logger.info(f"✅ {len(records)} registros escritos en {path} ({fmt})")


def read_records(path: str) -> List[ExperimentRecord]:
    with open(path, "r", encoding="utf-8", newline="") as fh:
        text = fh.read()
    if path.endswith("." + FORMAT_JSON) or text.lstrip().startswith("["):
        return records_from_json(text)
    return records_from_csv(text)


def convert(src: str, fmt: str, dst: str) -> int:
    records = read_records(src)
    emit(records, fmt, dst)
    return len(records)
