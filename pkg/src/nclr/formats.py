"""Text and JSON serialization for compositions, tableaux, frank words and tables.

Compositions are comma-separated positive integers; the empty string is the
empty composition.  Tableaux list their rows bottom to top.  In JSON an inner
cell is written as ``0`` inside its row, in text as ``.``.
"""

from __future__ import annotations

import json
from typing import Sequence

from nclr.combinatorics import Composition, Word
from nclr.composition_tableaux import CompositionTableau
from nclr.frank import column_factorization
from nclr.coefficients import CoefficientTable
from nclr.tableaux import SkewTableau


class ParseError(ValueError):
    pass


def parse_composition(text: str) -> Composition:
    text = text.strip()
    if text in ("", "()", "-"):
        return ()
    parts = []
    for piece in text.strip("()").split(","):
        piece = piece.strip()
        if not piece.isdigit() or int(piece) == 0:
            raise ParseError(f"expected positive integers separated by commas, got {text!r}")
        parts.append(int(piece))
    return tuple(parts)


def format_composition(a: Sequence[int]) -> str:
    return ",".join(str(x) for x in a)


def show_composition(a: Sequence[int]) -> str:
    return "(" + ",".join(str(x) for x in a) + ")"


def dumps(data) -> str:
    """The one JSON layout used everywhere, so re-serializing is byte-stable."""
    return json.dumps(data, separators=(",", ":"), sort_keys=True)


# ---------------------------------------------------------------------------
# tableaux (Young and composition share the row layout)

def _rows_with_inner(t: SkewTableau | CompositionTableau) -> list[list[int]]:
    return [[0] * t.inner_part(r) + list(row) for r, row in enumerate(t.rows, start=1)]


def _split_rows(data: dict) -> tuple[tuple[int, ...], tuple[tuple[int, ...], ...]]:
    try:
        inner = tuple(int(x) for x in data["inner"])
        raw = [[int(x) for x in row] for row in data["rows"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed tableau record: {exc}") from None
    rows = []
    for r, row in enumerate(raw, start=1):
        k = inner[r - 1] if r <= len(inner) else 0
        if len(row) < k or any(row[:k]) or not all(x > 0 for x in row[k:]):
            raise ParseError(f"row {r} does not match inner part {k}")
        rows.append(tuple(row[k:]))
    if len(inner) > len(rows):
        raise ParseError("inner shape has more rows than the tableau")
    return inner, tuple(rows)


def tableau_to_dict(t: SkewTableau) -> dict:
    return {"inner": list(t.inner), "rows": _rows_with_inner(t)}


def tableau_from_dict(data: dict) -> SkewTableau:
    return SkewTableau(*_split_rows(data))


def ct_to_dict(t: CompositionTableau) -> dict:
    return {
        "inner": list(t.inner),
        "rows": _rows_with_inner(t),
        "shape": {"outer": list(t.outer), "inner": list(t.inner)},
    }


def ct_from_dict(data: dict) -> CompositionTableau:
    t = CompositionTableau(*_split_rows(data))
    shape = data.get("shape")
    if shape is not None and (list(t.outer) != list(shape["outer"]) or list(t.inner) != list(shape["inner"])):
        raise ParseError("shape record disagrees with the rows")
    return t


def tableau_to_text(t: SkewTableau | CompositionTableau) -> str:
    """One line per row, bottom row first."""
    return "\n".join(
        " ".join(["."] * t.inner_part(r) + [str(v) for v in row]) for r, row in enumerate(t.rows, start=1)
    )


def tableau_from_text(text: str, composition: bool = False) -> SkewTableau | CompositionTableau:
    inner, rows = [], []
    for line in text.strip("\n").splitlines():
        tokens = line.split()
        dots = 0
        while dots < len(tokens) and tokens[dots] == ".":
            dots += 1
        try:
            rows.append(tuple(int(x) for x in tokens[dots:]))
        except ValueError:
            raise ParseError(f"bad tableau row {line!r}") from None
        inner.append(dots)
    while inner and inner[-1] == 0:
        inner.pop()
    kind = CompositionTableau if composition else SkewTableau
    return kind(tuple(inner), tuple(rows))


# ---------------------------------------------------------------------------
# frank words

def frank_to_json(w: Sequence[int]) -> list[list[int]]:
    return [list(f) for f in column_factorization(w)]


def frank_from_json(data: list[list[int]]) -> Word:
    return tuple(int(x) for column in data for x in column)


def parse_word(text: str) -> Word:
    """``321|7621|5`` or ``3,2,1,7,6,2,1,5``; separators only matter for multi-digit letters."""
    text = text.strip()
    if not text:
        return ()
    if "," in text:
        return parse_composition(text.replace("|", ","))
    if not all(ch.isdigit() or ch in "| " for ch in text):
        raise ParseError(f"bad word {text!r}")
    word = tuple(int(ch) for ch in text if ch.isdigit())
    if 0 in word:
        raise ParseError("letters must be positive")
    return word


# ---------------------------------------------------------------------------
# coefficient tables

def table_to_json(table: CoefficientTable) -> str:
    return dumps(table.to_dict())


def table_from_json(text: str) -> CoefficientTable:
    try:
        return CoefficientTable.from_dict(json.loads(text))
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed coefficient table: {exc}") from None


def table_to_tsv(table: CoefficientTable) -> str:
    lines = ["gamma\tcoeff"]
    lines += [f"{format_composition(g)}\t{c}" for g, c in sorted(table.entries.items())]
    return "\n".join(lines)
