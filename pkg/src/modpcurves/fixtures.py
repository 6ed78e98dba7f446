"""Line-oriented fixture files: one record per line, '#' comments.

Record grammar:  type; key=value; key=value; ...
Values are parsed lazily by the consumer; this module only tokenizes and
offers helpers for the common value shapes (factorizations like "-2^18*3*353",
integer lists, curve literals, cubic triples).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .arith import Factorization


class FixtureError(Exception):
    def __init__(self, path, lineno, message):
        self.path, self.lineno = path, lineno
        super().__init__(f"{path}:{lineno}: {message}")


@dataclass(frozen=True)
class Record:
    kind: str
    fields: dict
    path: str
    lineno: int

    @property
    def check_id(self) -> str:
        return f"{Path(self.path).name}:{self.lineno}"

    def get(self, key: str, default=None):
        return self.fields.get(key, default)

    def require(self, key: str) -> str:
        if key not in self.fields:
            raise FixtureError(self.path, self.lineno, f"missing field {key!r}")
        return self.fields[key]


def parse_fixture_text(text: str, path: str = "<string>") -> list[Record]:
    records = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = [p.strip() for p in line.split(";")]
        kind = parts[0]
        fields = {}
        for part in parts[1:]:
            if not part:
                continue
            if "=" not in part:
                raise FixtureError(path, lineno, f"expected key=value, got {part!r}")
            key, _, value = part.partition("=")
            fields[key.strip()] = value.strip()
        records.append(Record(kind, fields, path, lineno))
    return records


def load_fixture_file(path) -> list[Record]:
    path = Path(path)
    return parse_fixture_text(path.read_text(), str(path))


def default_fixture_dir() -> Path:
    return Path(str(resources.files("modpcurves") / "fixtures"))


def parse_factorization(text: str) -> Factorization:
    """Parse "-2^18*3*353" (or "1" / "-1") into a Factorization."""
    t = text.replace(" ", "")
    sign = 1
    if t.startswith("-"):
        sign, t = -1, t[1:]
    if t in ("", "1"):
        return Factorization(sign, ())
    from .arith import factor as _factor

    counts: dict = {}
    for piece in t.split("*"):
        m = re.fullmatch(r"(\d+)(?:\^(\d+))?", piece)
        if not m:
            raise ValueError(f"bad factorization piece {piece!r} in {text!r}")
        base, exp = int(m.group(1)), int(m.group(2) or 1)
        # bases need not be prime in fixture text (e.g. "1967" = 7 * 281)
        for p, e in _factor(base).factors:
            counts[p] = counts.get(p, 0) + e * exp
    return Factorization(sign, tuple(sorted(counts.items())))


def parse_int_list(text: str) -> list:
    """Comma list of integers with '-' allowed as a skip marker (None)."""
    out = []
    for piece in text.split(","):
        piece = piece.strip()
        out.append(None if piece == "-" else int(piece))
    return out


def parse_pair(text: str) -> tuple[int, int]:
    m = re.fullmatch(r"\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)", text.strip())
    if not m:
        raise ValueError(f"bad pair {text!r}")
    return int(m.group(1)), int(m.group(2))
