"""Configuration documents (line-oriented text) and JSON reports.

A configuration document looks like::

    name: conic
    n: 1
    points:
    0
    1
    2
    heights: 0,-1,0

Points are written one per line with coordinates separated by single
spaces.  The ``heights`` line is optional.  Documents written by
:func:`format_config` parse back to an equal document, and parsing a
canonical document then writing it reproduces the bytes exactly.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .exact import format_rational, to_fraction

_INT = re.compile(r"-?(0|[1-9][0-9]*)$")
_RATIONAL = re.compile(r"-?(0|[1-9][0-9]*)(/[1-9][0-9]*)?$")
_NAME = re.compile(r"[A-Za-z0-9][A-Za-z0-9_.+-]*$")


class ParseError(ValueError):
    def __init__(self, line: int, column: int, message: str):
        super().__init__(f"{line}:{column}: {message}")
        self.line = line
        self.column = column
        self.message = message


@dataclass(frozen=True)
class ConfigDocument:
    name: str
    n: int
    points: tuple[tuple[int, ...], ...]
    heights: tuple[Fraction, ...] | None = None


def _tokens(text: str, start: int, sep: str):
    """Split ``text`` on ``sep`` yielding (token, 1-based column)."""
    col = start
    for tok in text.split(sep):
        yield tok, col
        col += len(tok) + len(sep)


def _parse_int(tok: str, lineno: int, col: int) -> int:
    if not _INT.match(tok):
        raise ParseError(lineno, col, f"expected an integer, got {tok!r}")
    return int(tok)


def parse_rational(tok: str, lineno: int = 1, col: int = 1) -> Fraction:
    if not _RATIONAL.match(tok):
        raise ParseError(lineno, col, f"expected a rational p/q, got {tok!r}")
    q = to_fraction(tok)
    if format_rational(q) != tok:
        raise ParseError(lineno, col, f"rational {tok!r} is not in lowest terms")
    return q


def parse_heights(text: str, lineno: int = 1, start: int = 1) -> tuple[Fraction, ...]:
    return tuple(parse_rational(tok, lineno, col) for tok, col in _tokens(text, start, ","))


def _field(lines: list[str], index: int, key: str) -> str:
    lineno = index + 1
    if index >= len(lines):
        raise ParseError(lineno, 1, f"expected '{key}:', got end of document")
    line = lines[index]
    prefix = f"{key}:"
    if not line.startswith(prefix):
        raise ParseError(lineno, 1, f"expected '{key}:'")
    rest = line[len(prefix):]
    if key == "points":
        if rest:
            raise ParseError(lineno, len(prefix) + 1, "unexpected text after 'points:'")
        return rest
    if not rest.startswith(" ") or len(rest) < 2:
        raise ParseError(lineno, len(prefix) + 1, f"expected a single space and a value after '{key}:'")
    return rest[1:]


def parse_config(text: str) -> ConfigDocument:
    """Parse a configuration document, reporting errors by line and column."""
    if "\r" in text:
        line = text[: text.index("\r")].count("\n") + 1
        raise ParseError(line, len(text[: text.index("\r")].rsplit("\n", 1)[-1]) + 1, "CR line endings are not allowed")
    if not text.endswith("\n"):
        last = text.count("\n") + 1
        raise ParseError(last, len(text.rsplit("\n", 1)[-1]) + 1, "document must end with a newline")
    lines = text[:-1].split("\n")
    name = _field(lines, 0, "name")
    if not _NAME.match(name):
        raise ParseError(1, 7, f"invalid name {name!r}")
    n_text = _field(lines, 1, "n")
    n = _parse_int(n_text, 2, 4)
    if n < 1:
        raise ParseError(2, 4, "dimension must be positive")
    _field(lines, 2, "points")
    points = []
    i = 3
    while i < len(lines) and not lines[i].startswith("heights:"):
        lineno = i + 1
        coords = [_parse_int(tok, lineno, col) for tok, col in _tokens(lines[i], 1, " ")]
        if len(coords) != n:
            raise ParseError(lineno, 1, f"point has {len(coords)} coordinates, expected {n}")
        points.append(tuple(coords))
        i += 1
    if not points:
        raise ParseError(i + 1, 1, "expected at least one point")
    heights = None
    if i < len(lines):
        heights = parse_heights(_field(lines, i, "heights"), i + 1, len("heights: ") + 1)
        if len(heights) != len(points):
            raise ParseError(i + 1, 1, f"{len(heights)} heights for {len(points)} points")
        i += 1
    if i < len(lines):
        raise ParseError(i + 1, 1, "unexpected line after the heights")
    return ConfigDocument(name, n, tuple(points), heights)


def format_config(doc: ConfigDocument) -> str:
    out = [f"name: {doc.name}", f"n: {doc.n}", "points:"]
    out += [" ".join(str(x) for x in p) for p in doc.points]
    if doc.heights is not None:
        out.append("heights: " + ",".join(format_rational(Fraction(h)) for h in doc.heights))
    return "\n".join(out) + "\n"


def read_config(path) -> ConfigDocument:
    with open(path, encoding="utf-8", newline="") as fh:
        return parse_config(fh.read())


def rational(q) -> str:
    return format_rational(Fraction(q))


def rationals(v) -> list[str]:
    return [rational(x) for x in v]


def dump_report(report: Any) -> str:
    """Render a report as JSON; key order is the construction order."""
    return json.dumps(report, indent=2, ensure_ascii=False) + "\n"
