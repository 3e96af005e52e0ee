"""Plain-text tournament files.

    # optional comment lines anywhere
    3
    010
    001
    100

Line 1 (after comments) is the order n, then n rows of n characters over
{0,1}; row x, column y is adj(x, y) and the diagonal is 0.
"""
from __future__ import annotations

from .core import Tournament, _from_out_unchecked


class ParseError(ValueError):
    def __init__(self, line: int, column: int, message: str):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


def parse_tournament(text: str) -> Tournament:
    lines = [(i + 1, ln.rstrip("\r\n")) for i, ln in enumerate(text.splitlines())]
    body = [(no, ln) for no, ln in lines if not ln.lstrip().startswith("#") and ln.strip()]
    if not body:
        raise ParseError(1, 1, "missing order line")
    no, head = body[0]
    try:
        n = int(head.strip())
    except ValueError:
        raise ParseError(no, 1, f"expected an integer order, got {head.strip()!r}") from None
    if n < 0:
        raise ParseError(no, 1, "negative order")
    rows = body[1:]
    if len(rows) != n:
        where = rows[n][0] if len(rows) > n else (rows[-1][0] + 1 if rows else no + 1)
        raise ParseError(where, 1, f"expected {n} matrix rows, got {len(rows)}")
    bits = []
    for x, (no, ln) in enumerate(rows):
        row = ln.strip()
        if len(row) != n:
            raise ParseError(no, min(len(row), n) + 1, f"row {x} has length {len(row)}, expected {n}")
        for y, ch in enumerate(row):
            if ch not in "01":
                raise ParseError(no, y + 1, f"unexpected character {ch!r}")
        if row[x] != "0":
            raise ParseError(no, x + 1, "diagonal entry must be 0")
        bits.append(row)
    for x in range(n):
        for y in range(x + 1, n):
            if bits[x][y] == bits[y][x]:
                what = "missing" if bits[x][y] == "0" else "contradictory"
                raise ParseError(rows[x][0], y + 1, f"{what} pair ({x},{y})")
    out = [sum(1 << y for y, ch in enumerate(row) if ch == "1") for row in bits]
    t = _from_out_unchecked(out)
    # Re-run the value checks (order cap) through the validating constructor.
    return Tournament(t.n, t.out)


def format_tournament(t: Tournament) -> str:
    return "\n".join([str(t.n)] + t.rows()) + "\n"
