"""Output records and their JSON-lines / CSV / b-file serializations.

Integers and floats are written as decimal strings, never in exponent
notation, so every JSON line survives parse and re-serialize unchanged.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from decimal import Decimal
from typing import ClassVar, Optional


def format_float(x: float) -> str:
    return format(Decimal(repr(float(x))), "f")


def _opt_int(v: Optional[int]) -> Optional[str]:
    return None if v is None else str(v)


@dataclass(frozen=True)
class PredicateRecord:
    TYPE: ClassVar[str] = "check"
    partition: str
    concave: bool
    superconcave: bool
    closure: str

    def to_row(self) -> dict:
        return {
            "partition": self.partition,
            "concave": self.concave,
            "superconcave": self.superconcave,
            "closure": self.closure,
        }

    @classmethod
    def from_row(cls, row: dict) -> PredicateRecord:
        return cls(row["partition"], bool(row["concave"]), bool(row["superconcave"]), row["closure"])

    def plain(self) -> str:
        lines = [
            f"partition: {self.partition or '()'}",
            f"concave: {str(self.concave).lower()}",
            f"super-concave: {str(self.superconcave).lower()}",
        ]
        if not self.concave:
            lines.append(f"closure: {self.closure}")
        return "\n".join(lines)


@dataclass(frozen=True)
class CountRecord:
    TYPE: ClassVar[str] = "count"
    kind: str
    n: int
    r: Optional[int]
    value: int

    def to_row(self) -> dict:
        return {"kind": self.kind, "n": str(self.n), "r": _opt_int(self.r), "value": str(self.value)}

    @classmethod
    def from_row(cls, row: dict) -> CountRecord:
        r = row["r"]
        return cls(row["kind"], int(row["n"]), None if r in (None, "") else int(r), int(row["value"]))

    def plain(self) -> str:
        return f"{self.n} {self.value}"


@dataclass(frozen=True)
class SeriesRecord:
    TYPE: ClassVar[str] = "series"
    name: str
    r: Optional[int]
    trunc: int
    coefficients: tuple[int, ...]
    text: str

    def to_row(self) -> dict:
        return {
            "name": self.name,
            "r": _opt_int(self.r),
            "trunc": str(self.trunc),
            "coefficients": [str(c) for c in self.coefficients],
            "text": self.text,
        }

    @classmethod
    def from_row(cls, row: dict) -> SeriesRecord:
        r = row["r"]
        return cls(
            row["name"],
            None if r in (None, "") else int(r),
            int(row["trunc"]),
            tuple(int(c) for c in row["coefficients"]),
            row["text"],
        )

    def plain(self) -> str:
        return self.text


@dataclass(frozen=True)
class PolyRecord:
    TYPE: ClassVar[str] = "poly"
    name: str
    r: int
    text: str

    def to_row(self) -> dict:
        return {"name": self.name, "r": str(self.r), "text": self.text}

    @classmethod
    def from_row(cls, row: dict) -> PolyRecord:
        return cls(row["name"], int(row["r"]), row["text"])

    def plain(self) -> str:
        return self.text


@dataclass(frozen=True)
class AsymptoticRecord:
    TYPE: ClassVar[str] = "asymptotic"
    n: int
    exact: int
    estimate: float
    ratio: float

    def to_row(self) -> dict:
        return {
            "n": str(self.n),
            "exact": str(self.exact),
            "estimate": format_float(self.estimate),
            "ratio": format_float(self.ratio),
        }

    @classmethod
    def from_row(cls, row: dict) -> AsymptoticRecord:
        return cls(int(row["n"]), int(row["exact"]), float(row["estimate"]), float(row["ratio"]))

    def plain(self) -> str:
        return f"n={self.n} exact={self.exact} estimate={self.estimate:.6e} ratio={self.ratio:.6f}"


RECORD_TYPES = {cls.TYPE: cls for cls in (PredicateRecord, CountRecord, SeriesRecord, PolyRecord, AsymptoticRecord)}


def to_json(record) -> str:
    return json.dumps({"type": record.TYPE, **record.to_row()}, ensure_ascii=False, separators=(",", ":"))


def from_json(line: str):
    data = json.loads(line)
    return RECORD_TYPES[data.pop("type")].from_row(data)


def to_csv(records) -> str:
    records = list(records)
    buf = io.StringIO()
    if not records:
        return ""
    header = list(records[0].to_row())
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for rec in records:
        row = rec.to_row()
        writer.writerow([" ".join(v) if isinstance(v, list) else ("" if v is None else v) for v in row.values()])
    return buf.getvalue()


def to_bfile(pairs) -> str:
    """OEIS b-file body: one ``n a(n)`` line per pair."""
    return "".join(f"{n} {a}\n" for n, a in pairs)


def read_bfile(text: str) -> list[tuple[int, int]]:
    out = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        n, a = line.split()
        out.append((int(n), int(a)))
    return out
