"""Input documents: a line-oriented text format and a JSON equivalent.

Three kinds of desk-scale inputs exist — matrices, graphs, clutters.
The text format is one header row followed by data rows, with rows
separated by newlines or ``/`` so a whole input fits on one line:

    matrix 3 3 / 1 1 0 / 0 1 1 / 1 0 1
    graph 5 / 1 2 / 2 3 / 3 4 / 4 5 / 5 1
    clutter 3 / 1 2 / 2 3 / 1 3

Vertex indices are 1-based.  The JSON form is an object with a "kind"
key and the same payload ("entries" for matrices, "vertices"/"edges"
for graphs and clutters).  Parsing and serialization round-trip
losslessly; malformed input raises ParseError with a line/column,
semantically invalid input (zero rows, nested clutter edges, loops)
raises DomainError naming the violated rule.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass

from .clutters import Clutter, Graph, incidence_matrix
from .errors import DomainError, ParseError
from .exact import ExactMatrix, as_int

KINDS = ("matrix", "graph", "clutter")

_TOKEN = re.compile(r"[^\s/]+")


@dataclass(frozen=True)
class InputDocument:
    """One parsed input: its kind and the validated payload object."""

    kind: str
    payload: object

    def as_matrix(self) -> ExactMatrix:
        """The input as a matrix; graphs and clutters contribute their
        vertex-edge incidence matrix."""
        if self.kind == "matrix":
            return self.payload
        return incidence_matrix(self.payload)


def _rows_with_positions(text: str):
    """Split into rows at newlines and '/', each row a list of
    (token, line, column) triples; empty rows vanish."""
    rows = []
    for lineno, line in enumerate(text.split("\n"), start=1):
        pieces = line.split("/")
        offset = 0
        for piece in pieces:
            row = [(m.group(0), lineno, offset + m.start() + 1)
                   for m in _TOKEN.finditer(piece)]
            if row:
                rows.append(row)
            offset += len(piece) + 1
    return rows


def _int_token(tok) -> int:
    text, line, col = tok
    try:
        return int(text)
    except ValueError:
        raise ParseError(f"expected an integer, got {text!r}", line, col)


def _positive(value: int, what: str, tok) -> int:
    if value <= 0:
        raise ParseError(f"{what} must be positive, got {value}",
                         tok[1], tok[2])
    return value


def _parse_text(text: str) -> InputDocument:
    rows = _rows_with_positions(text)
    if not rows:
        raise ParseError("empty input", 1, 1)
    head = rows[0]
    kind = head[0][0]
    if kind not in KINDS:
        raise ParseError(
            f"unknown input kind {kind!r}; expected one of {KINDS}",
            head[0][1], head[0][2])

    if kind == "matrix":
        if len(head) != 3:
            raise ParseError("matrix header needs two dimensions: "
                             "'matrix ROWS COLS'", head[0][1], head[0][2])
        r = _positive(_int_token(head[1]), "row count", head[1])
        c = _positive(_int_token(head[2]), "column count", head[2])
        body = rows[1:]
        if len(body) != r:
            raise ParseError(
                f"matrix declared {r} rows but has {len(body)}",
                head[0][1], head[0][2])
        entries = []
        for row in body:
            if len(row) != c:
                raise ParseError(
                    f"matrix row has {len(row)} entries, expected {c}",
                    row[0][1], row[0][2])
            entries.append(tuple(_int_token(t) for t in row))
        matrix = ExactMatrix(tuple(entries))
        matrix.require_input_matrix()
        return InputDocument("matrix", matrix)

    if len(head) != 2:
        raise ParseError(f"{kind} header needs a vertex count: "
                         f"'{kind} N'", head[0][1], head[0][2])
    n = _positive(_int_token(head[1]), "vertex count", head[1])
    body = rows[1:]
    if kind == "graph":
        edges = []
        for row in body:
            if len(row) != 2:
                raise ParseError(
                    f"graph edge row has {len(row)} entries, expected 2",
                    row[0][1], row[0][2])
            edges.append((_int_token(row[0]), _int_token(row[1])))
        return InputDocument("graph", Graph.from_edges(n, edges))

    edges = [tuple(_int_token(t) for t in row) for row in body]
    return InputDocument("clutter", Clutter.from_edges(n, edges))


def _parse_json(text: str) -> InputDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e.msg}", e.lineno, e.colno)
    if not isinstance(data, dict):
        raise ParseError("JSON input must be an object")
    kind = data.get("kind")
    if kind not in KINDS:
        raise ParseError(
            f"unknown input kind {kind!r}; expected one of {KINDS}")

    def _ints(value, what):
        if (not isinstance(value, list)
                or not all(isinstance(x, int) and not isinstance(x, bool)
                           for x in value)):
            raise ParseError(f"{what} must be an array of integers")
        return tuple(value)

    if kind == "matrix":
        entries = data.get("entries")
        if not isinstance(entries, list) or not entries:
            raise ParseError("matrix JSON needs a non-empty 'entries' array")
        parsed = tuple(_ints(row, "matrix row") for row in entries)
        if len({len(row) for row in parsed}) != 1:
            raise ParseError("matrix rows have unequal lengths")
        matrix = ExactMatrix(parsed)
        matrix.require_input_matrix()
        return InputDocument("matrix", matrix)

    vertices = data.get("vertices")
    if not isinstance(vertices, int) or isinstance(vertices, bool):
        raise ParseError(f"{kind} JSON needs an integer 'vertices'")
    if vertices <= 0:
        raise ParseError(f"vertex count must be positive, got {vertices}")
    edges = data.get("edges")
    if not isinstance(edges, list):
        raise ParseError(f"{kind} JSON needs an 'edges' array")
    rows = [_ints(e, "edge") for e in edges]
    if kind == "graph":
        for row in rows:
            if len(row) != 2:
                raise ParseError(f"graph edge {list(row)} is not a pair")
        return InputDocument("graph", Graph.from_edges(vertices, rows))
    return InputDocument("clutter", Clutter.from_edges(vertices, rows))


def parse_input(text: str, fmt: str | None = None) -> InputDocument:
    """Parse either format; ``fmt`` forces "text" or "json", None
    sniffs (JSON inputs start with '{')."""
    if fmt is None:
        fmt = "json" if text.lstrip()[:1] == "{" else "text"
    if fmt == "json":
        return _parse_json(text)
    if fmt == "text":
        return _parse_text(text)
    raise DomainError(f"unknown input format {fmt!r}")


def format_input(doc: InputDocument, fmt: str = "text") -> str:
    """Serialize a document; parse_input(format_input(doc)) == doc."""
    kind, payload = doc.kind, doc.payload
    if fmt == "text":
        if kind == "matrix":
            lines = [f"matrix {payload.rows} {payload.cols}"]
            lines += [" ".join(str(as_int(x)) for x in row)
                      for row in payload.entries]
        else:
            lines = [f"{kind} {payload.vertex_count}"]
            lines += [" ".join(str(v) for v in e) for e in payload.edges]
        return "\n".join(lines) + "\n"
    if fmt == "json":
        if kind == "matrix":
            data = {"kind": kind,
                    "entries": [[as_int(x) for x in row]
                                for row in payload.entries]}
        else:
            data = {"kind": kind, "vertices": payload.vertex_count,
                    "edges": [list(e) for e in payload.edges]}
        return json.dumps(data, sort_keys=True) + "\n"
    raise DomainError(f"unknown input format {fmt!r}")
