"""Line-oriented text format for matroids and realizations.

    # example
    name: wheel3
    n: 6
    presentation: lines
    lines: 1 2 3 / 3 4 5 / 1 5 6

Matrix presentations replace the last line with a field declaration, a row
count, and the rows themselves (columns = points; rational entries may be
written a/b):

    presentation: matrix
    field: Q
    rows: 3
    1 1 0 0 0 1
    0 1 1 1 0 0
    0 0 0 1 1 1

Comments start with '#'; labels are 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ParseError
from .fields import QQ, parse_field
from .matroid import Matroid, from_circuits, from_lines, from_matrix
from .realization import Realization


@dataclass(frozen=True)
class ParsedMatroid:
    name: str
    matroid: Matroid
    realization: Realization | None


def parse_matroid_text(text, source="<string>") -> ParsedMatroid:
    lines = text.splitlines()
    fields = {}
    field_lineno = {}
    matrix_rows = []
    expect_rows = 0
    for lineno, raw in enumerate(lines, start=1):
        stripped = raw.split("#", 1)[0].strip()
        if not stripped:
            continue
        if expect_rows > len(matrix_rows):
            matrix_rows.append((lineno, stripped))
            continue
        if ":" not in stripped:
            raise ParseError(f"expected 'key: value', got {stripped!r}", lineno)
        key, value = stripped.split(":", 1)
        key = key.strip().lower()
        value = value.strip()
        if key in fields:
            raise ParseError(f"duplicate key {key!r}", lineno)
        fields[key] = value
        field_lineno[key] = lineno
        if key == "rows":
            try:
                expect_rows = int(value)
            except ValueError:
                raise ParseError(f"bad row count {value!r}", lineno) from None

    def need(key):
        if key not in fields:
            raise ParseError(f"missing {key!r} declaration", len(lines))
        return fields[key]

    name = fields.get("name", source)
    try:
        n = int(need("n"))
    except ValueError:
        raise ParseError(f"bad n {fields['n']!r}", field_lineno["n"]) from None
    kind = need("presentation").lower()
    if kind == "lines":
        groups = _parse_groups(need("lines"), field_lineno.get("lines", 1))
        matroid = from_lines(n, groups, name=name)
        return ParsedMatroid(name, matroid, None)
    if kind == "circuits":
        groups = _parse_groups(need("circuits"), field_lineno.get("circuits", 1))
        matroid = from_circuits(n, groups, name=name)
        return ParsedMatroid(name, matroid, None)
    if kind == "matrix":
        field = parse_field(need("field"))
        if expect_rows <= 0:
            raise ParseError("matrix presentation needs 'rows: <count>'", len(lines))
        if len(matrix_rows) < expect_rows:
            raise ParseError(
                f"expected {expect_rows} matrix rows, found {len(matrix_rows)}",
                len(lines),
            )
        rows = []
        for lineno, content in matrix_rows:
            entries = []
            for tok in content.split():
                try:
                    entries.append(Fraction(tok) if field == QQ else int(tok))
                except (ValueError, ZeroDivisionError):
                    raise ParseError(f"bad matrix entry {tok!r}", lineno) from None
            if len(entries) != n:
                raise ParseError(
                    f"matrix row has {len(entries)} entries, expected n={n}", lineno
                )
            rows.append(entries)
        realization = Realization(rows, field)
        matroid = from_matrix(realization, name=name)
        return ParsedMatroid(name, matroid, realization)
    raise ParseError(
        f"unknown presentation {kind!r} (expected lines, circuits or matrix)",
        field_lineno["presentation"],
    )


def _parse_groups(value, lineno):
    groups = []
    for chunk in value.split("/"):
        chunk = chunk.strip()
        if not chunk:
            continue
        try:
            groups.append([int(tok) for tok in chunk.split()])
        except ValueError:
            raise ParseError(f"bad label in {chunk!r}", lineno) from None
    return groups


def parse_matroid_file(path) -> ParsedMatroid:
    with open(path, encoding="utf-8") as handle:
        text = handle.read()
    return parse_matroid_text(text, source=str(path))


def realization_to_text(real, name="arrangement") -> str:
    out = [
        f"name: {name}",
        f"n: {real.ncols}",
        "presentation: matrix",
        f"field: {real.field.name}",
        f"rows: {real.nrows}",
    ]
    for row in real.rows:
        out.append(" ".join(str(x) for x in row))
    return "\n".join(out) + "\n"
