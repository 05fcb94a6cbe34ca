"""Export bench tables and reports to CSV and JSON."""

import csv
import io
import json
from typing import Any, Dict, List, Sequence

from pydantic import BaseModel

BENCH_FIELDS = ["algorithm", "n", "k", "count", "mean_length", "max_length", "runtime_s"]


def to_csv(rows: List[Dict[str, Any]], fields: Sequence[str] = BENCH_FIELDS) -> str:
    """
    Convert rows to CSV with a fixed header.

    An empty row list still yields the header line.
    """
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(fields), extrasaction="ignore", lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: row.get(k) for k in fields})
    return buf.getvalue()


def to_json(data: Any, indent: int = 2) -> str:
    """Serialize *data* (pydantic models included) to a JSON string."""
    if isinstance(data, BaseModel):
        return data.model_dump_json(indent=indent)
    return json.dumps(data, indent=indent, default=str)


def write_csv(rows: List[Dict[str, Any]], path: str, fields: Sequence[str] = BENCH_FIELDS) -> None:
    with open(path, "w", newline="") as fh:
        fh.write(to_csv(rows, fields))


def write_json(data: Any, path: str) -> None:
    with open(path, "w") as fh:
        fh.write(to_json(data))
