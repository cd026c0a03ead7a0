"""Plain-text ring table files.

    order 4
    one 1
    add
    0 1 2 3
    ...
    mul
    ...
    names        (optional, one per line)

Zero is index 0, so row 0 of ``add`` must be the identity row.
"""

from __future__ import annotations

import logging
from pathlib import Path

import numpy as np

from centrum.core.config import Settings
from centrum.core.errors import TableFormatError
from centrum.ring import FiniteRing, validate

logger = logging.getLogger(__name__)


def _header(lines: list[str], i: int, key: str) -> int:
    if i >= len(lines):
        raise TableFormatError(f"missing '{key}' line")
    parts = lines[i].split()
    if len(parts) != 2 or parts[0] != key or not parts[1].isdigit():
        raise TableFormatError(f"line {i + 1}: expected '{key} <int>', got {lines[i]!r}")
    return int(parts[1])


def _block(lines: list[str], i: int, key: str, n: int) -> np.ndarray:
    if i >= len(lines) or lines[i].strip() != key:
        raise TableFormatError(f"expected '{key}' section at line {i + 1}")
    rows = lines[i + 1 : i + 1 + n]
    if len(rows) != n:
        raise TableFormatError(f"'{key}' needs {n} rows, found {len(rows)}")
    try:
        table = np.array([[int(x) for x in row.split()] for row in rows], dtype=np.int64)
    except ValueError as exc:
        raise TableFormatError(f"'{key}' rows must hold integers: {exc}") from exc
    if table.shape != (n, n):
        raise TableFormatError(f"'{key}' must be {n}x{n}")
    return table


def parse_table(text: str, settings: Settings | None = None) -> FiniteRing:
    """Parse the table format and validate the result."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    n = _header(lines, 0, "order")
    one = _header(lines, 1, "one")
    add = _block(lines, 2, "add", n)
    mul = _block(lines, 3 + n, "mul", n)
    if not np.array_equal(add[0], np.arange(n)):
        raise TableFormatError("row 0 of add must be the identity row (zero is index 0)")
    names = None
    rest = lines[4 + 2 * n :]
    if rest:
        if rest[0].strip() != "names":
            raise TableFormatError(f"unexpected line after tables: {rest[0]!r}")
        names = [ln.strip() for ln in rest[1:]]
        if len(names) != n:
            raise TableFormatError(f"'names' needs {n} lines, found {len(names)}")
    return validate(add, mul, zero=0, one=one, names=names, settings=settings)


def load_table(path: str | Path, settings: Settings | None = None) -> FiniteRing:
    path = Path(path)
    logger.info("Loading ring table from %s", path)
    return parse_table(path.read_text(encoding="utf-8"), settings)


def dump_table(R: FiniteRing) -> str:
    out = [f"order {R.order}", f"one {R.one}", "add"]
    out += [" ".join(map(str, row)) for row in R.add.tolist()]
    out.append("mul")
    out += [" ".join(map(str, row)) for row in R.mul.tolist()]
    out.append("names")
    out += list(R.names)
    return "\n".join(out) + "\n"


def write_table(R: FiniteRing, path: str | Path) -> Path:
    if R.zero != 0:
        raise TableFormatError("table files require zero at index 0")
    path = Path(path)
    path.write_text(dump_table(R), encoding="utf-8")
    logger.info("Wrote order-%d ring table to %s", R.order, path)
    return path
