"""Text and JSON forms of Betti tables.

The text form follows the Macaulay2 layout: entry ``beta[i, k+i]`` sits in
column i of row ``k:``, zeros print as ``.``, a ``total:`` row comes first
and B-tables whose tail continues past the last printed column end the row
with ``...``.  Output is normalized to single spaces; the reader accepts any
run of whitespace, so blocks pasted from elsewhere parse as well.

Lines starting with ``#`` carry metadata (``# kind: B``, ``# d: 3``,
``# command: ...``).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ParseError
from .tables import BBettiTable, SBettiTable, tail_expand


@dataclass
class TableDocument:
    kind: str
    table: object
    d: int | None = None
    meta: dict = field(default_factory=dict)

    @classmethod
    def of(cls, table, **meta):
        if isinstance(table, BBettiTable):
            return cls("B", table, table.d, dict(meta))
        return cls("S", table, None, dict(meta))


def fmt_q(v) -> str:
    v = Fraction(v)
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def _cells(doc, max_col):
    """Map (row, col) -> value for every printed nonzero cell, plus the printed column count."""
    t = doc.table
    cells = {}
    if doc.kind == "S":
        ncols = 3
        for (i, j), v in t.items():
            cells[(j - i, i)] = v
        return cells, ncols, set()
    # columns 0..3 are stored data and always print, so the text stays lossless
    max_col = max(max_col, 3)
    ncols = max_col + 1
    for (i, j), v in t.items():
        cells[(j - i, i)] = v
    for i, j, v in tail_expand(t, max_col):
        cells[(j - i, i)] = v
    ellipsis = set()
    if t.d > 1:
        for j in t.column(3):
            ellipsis.add(j - 3)
    return cells, ncols, ellipsis


def render_m2(doc: TableDocument, max_col: int = 5, header: bool = True) -> str:
    if max_col < 2:
        raise ValueError("max_col must be at least 2")
    lines = []
    if header:
        lines.append(f"# kind: {doc.kind}")
        if doc.kind == "B":
            lines.append(f"# d: {doc.d}")
        for key in sorted(doc.meta):
            lines.append(f"# {key}: {doc.meta[key]}")
    cells, ncols, ellipsis = _cells(doc, max_col)
    totals = [Fraction(0)] * ncols
    for (_, i), v in cells.items():
        totals[i] += v
    lines.append(" ".join(str(i) for i in range(ncols)))
    lines.append("total: " + " ".join(fmt_q(v) for v in totals))
    rows = sorted({r for r, _ in cells})
    if rows:
        for r in range(rows[0], rows[-1] + 1):
            body = " ".join(fmt_q(cells[(r, i)]) if (r, i) in cells else "." for i in range(ncols))
            line = f"{r}: {body}"
            if r in ellipsis:
                line += " ..."
            lines.append(line)
    return "\n".join(lines) + "\n"


def render_json(doc: TableDocument) -> str:
    out = {
        "kind": doc.kind,
        "entries": [[i, j, fmt_q(v)] for (i, j), v in doc.table.items()],
    }
    if doc.kind == "B":
        out["d"] = doc.d
    if doc.meta:
        out["meta"] = {k: str(v) for k, v in doc.meta.items()}
    lines = []
    for key in sorted(out):
        if key == "entries":
            rows = ",\n".join("    " + json.dumps(e) for e in out[key])
            lines.append(f'  "entries": [\n{rows}\n  ]' if rows else '  "entries": []')
        else:
            lines.append(f"  {json.dumps(key)}: {json.dumps(out[key], sort_keys=True)}")
    return "{\n" + ",\n".join(lines) + "\n}\n"


def render_betti(doc: TableDocument, fmt: str = "m2", max_col: int = 5) -> str:
    if not isinstance(doc, TableDocument):
        doc = TableDocument.of(doc)
    if fmt == "m2":
        return render_m2(doc, max_col)
    if fmt == "json":
        return render_json(doc)
    raise ValueError(f"unknown format {fmt!r}")


def _number(text, where):
    if text == ".":
        return Fraction(0)
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"non-numeric cell {text!r}", where) from None


def _build(kind, d, entries, meta, shown_max=3):
    if kind is None:
        kind = "B" if d is not None or any(i == 3 for (i, _) in entries) else "S"
    kind = kind.upper()
    if kind == "S":
        if any(i > 2 for (i, _) in entries):
            raise ParseError("S-table has entries beyond column 2")
        return TableDocument("S", SBettiTable(entries), None, meta)
    if kind != "B":
        raise ParseError(f"unknown table kind {kind!r}")
    if d is None:
        raise ParseError("B-table needs d (add '# d: N' or pass d)")
    stored = {k: v for k, v in entries.items() if k[0] <= 3}
    table = BBettiTable(d, stored)
    for (i, j), v in entries.items():
        if i >= 4 and table[i, j] != v:
            raise ParseError(f"column {i} entry {v} in degree {j} contradicts the tail rule (expected {table[i, j]})")
    for i, j, v in tail_expand(table, shown_max):
        if entries.get((i, j), Fraction(0)) != v:
            raise ParseError(f"missing tail entry beta[{i},{j}] = {v}")
    return TableDocument("B", table, d, meta)


def parse_m2(src: str, d: int | None = None, kind: str | None = None) -> TableDocument:
    meta = {}
    ncols = None
    entries = {}
    offset = 0
    for raw in src.splitlines(keepends=True):
        line = raw.strip()
        pos = offset
        offset += len(raw)
        if not line:
            continue
        if line.startswith("#"):
            key, sep, value = line[1:].partition(":")
            if sep:
                meta[key.strip()] = value.strip()
            continue
        label, sep, rest = line.partition(":")
        if not sep:
            cols = line.split()
            if cols != [str(k) for k in range(len(cols))]:
                raise ParseError(f"malformed column header {line!r}", pos)
            ncols = len(cols)
            continue
        label = label.strip()
        tokens = rest.split()
        if tokens and tokens[-1] in ("...", "…"):
            tokens = tokens[:-1]
        if ncols is None:
            ncols = len(tokens)
        if len(tokens) != ncols:
            raise ParseError(f"row {label!r} has {len(tokens)} cells, expected {ncols}", pos)
        if label == "total":
            for tok in tokens:
                _number(tok, pos)
            continue
        try:
            row = int(label)
        except ValueError:
            raise ParseError(f"malformed row label {label!r}", pos) from None
        for i, tok in enumerate(tokens):
            v = _number(tok, pos)
            if v:
                entries[(i, row + i)] = v
    kind = kind or meta.pop("kind", None)
    if "d" in meta:
        try:
            file_d = int(meta.pop("d"))
        except ValueError:
            raise ParseError("malformed '# d:' header") from None
        if d is not None and d != file_d:
            raise ParseError(f"table declares d = {file_d} but d = {d} was requested")
        d = file_d
    shown_max = (ncols - 1) if ncols else 3
    return _build(kind, d, entries, meta, shown_max)


def parse_json(src: str, d: int | None = None, kind: str | None = None) -> TableDocument:
    try:
        obj = json.loads(src)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.pos) from None
    if not isinstance(obj, dict) or "entries" not in obj:
        raise ParseError("JSON table needs an 'entries' list")
    entries = {}
    for item in obj["entries"]:
        if not (isinstance(item, list) and len(item) == 3 and isinstance(item[0], int) and isinstance(item[1], int)):
            raise ParseError(f"malformed entry {item!r}")
        v = _number(str(item[2]), None)
        if v:
            entries[(item[0], item[1])] = entries.get((item[0], item[1]), Fraction(0)) + v
    file_d = obj.get("d")
    if d is not None and file_d is not None and d != file_d:
        raise ParseError(f"table declares d = {file_d} but d = {d} was requested")
    shown_max = max([i for i, _ in entries] + [3])
    return _build(kind or obj.get("kind"), d if d is not None else file_d, entries, dict(obj.get("meta", {})), shown_max)


def parse_table(src: str, d: int | None = None, kind: str | None = None) -> TableDocument:
    if src.lstrip().startswith("{"):
        return parse_json(src, d, kind)
    return parse_m2(src, d, kind)
