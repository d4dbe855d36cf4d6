"""Published dimension tables shipped with the package.

``self-twist`` holds dim H^m(SL2, L(2^m)) for m = 4..31 and ``r3-twist``
holds dim H^m(SL2, L(3 * 2^(m-2))) for m = 3..32, both at p = 2.
"""

from __future__ import annotations

import csv
import hashlib
import io
from dataclasses import dataclass
from importlib import resources

__all__ = ["GoldenRow", "TABLE_FILES", "load_table", "table_checksum"]

TABLE_FILES = {
    "self-twist": "self_twist.csv",
    "r3-twist": "r3_twist.csv",
}


@dataclass(frozen=True)
class GoldenRow:
    m: int
    weight: int
    expected: int


def _read_text(name: str) -> str:
    try:
        fname = TABLE_FILES[name]
    except KeyError:
        raise ValueError(f"unknown table {name!r}; choose from {sorted(TABLE_FILES)}") from None
    return resources.files("sl2ext").joinpath("data", fname).read_text(encoding="ascii")


def load_table(name: str) -> list[GoldenRow]:
    reader = csv.DictReader(io.StringIO(_read_text(name)))
    return [GoldenRow(int(r["m"]), int(r["weight"]), int(r["dim"])) for r in reader]


def table_checksum(name: str) -> str:
    """SHA-256 of the embedded CSV, used to pin the transcription."""
    return hashlib.sha256(_read_text(name).encode("ascii")).hexdigest()
