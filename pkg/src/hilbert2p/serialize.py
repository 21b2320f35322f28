"""CSV / JSON encodings of survey rows."""

from __future__ import annotations

import csv
import io
import json
from typing import IO, Iterable

from .pipeline import SURVEY_FIELDS, SurveyRow

_INT_FIELDS = {"p", "e", "f", "h", "h_plus", "h2", "h2_plus", "norm_eps", "u", "t", "s", "r", "scale"}
_BOOL_FIELDS = {"solved", "mod4_square"}


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def write_csv(rows: Iterable[SurveyRow], fh: IO[str]) -> None:
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(SURVEY_FIELDS)
    for row in rows:
        d = row.as_dict()
        writer.writerow([_csv_cell(d[k]) for k in SURVEY_FIELDS])


def write_json(rows: Iterable[SurveyRow], fh: IO[str]) -> None:
    payload = [row.as_dict() for row in rows]
    fh.write("[\n")
    fh.write(",\n".join(json.dumps(d, ensure_ascii=False) for d in payload))
    fh.write("\n]\n" if payload else "]\n")


def dumps(rows: Iterable[SurveyRow], fmt: str) -> str:
    buf = io.StringIO()
    (write_csv if fmt == "csv" else write_json)(list(rows), buf)
    return buf.getvalue()


def _parse_cell(name: str, text: str):
    if text == "":
        return None
    if name in _INT_FIELDS:
        return int(text)
    if name in _BOOL_FIELDS:
        if text not in ("true", "false"):
            raise ValueError(f"bad boolean {text!r} in column {name}")
        return text == "true"
    return text


def read_csv(text: str) -> list[SurveyRow]:
    reader = csv.DictReader(io.StringIO(text))
    if tuple(reader.fieldnames or ()) != SURVEY_FIELDS:
        raise ValueError(f"unexpected CSV header {reader.fieldnames}")
    return [SurveyRow(**{k: _parse_cell(k, v) for k, v in rec.items()}) for rec in reader]


def read_json(text: str) -> list[SurveyRow]:
    return [SurveyRow(**d) for d in json.loads(text)]
