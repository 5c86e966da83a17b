"""Reading and writing ``seifert-data v1`` documents.

Line oriented; ``#`` starts a comment; blank lines are ignored::

    seifert-data v1
    g 1
    m 1
    M
    -1 1
    0 -1
    V
    1 0
    A
    0

``M`` and ``V`` are omitted when ``g = 0``.
"""

from __future__ import annotations

from .seifert import SeifertData, validate

__all__ = ["ParseError", "parse", "parse_raw", "render_document", "HEADER"]

HEADER = "seifert-data v1"


class ParseError(ValueError):
    def __init__(self, message: str, line: int, col: int = 1):
        self.message, self.line, self.col = message, line, col
        super().__init__(f"line {line}, column {col}: {message}")


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        if not body.strip():
            continue
        tokens = []
        pos = 0
        for tok in body.split():
            col = body.index(tok, pos)
            pos = col + len(tok)
            tokens.append((tok, col + 1))
        yield lineno, tokens


def _int(tok: str, lineno: int, col: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"expected an integer, found {tok!r}", lineno, col) from None


class _Cursor:
    def __init__(self, text: str):
        self._it = iter(list(_lines(text)))
        self.last_line = 0
        self._peeked = None

    def next(self, what: str):
        if self._peeked is not None:
            item, self._peeked = self._peeked, None
        else:
            item = next(self._it, None)
        if item is None:
            raise ParseError(f"unexpected end of input, expected {what}", self.last_line + 1)
        self.last_line = item[0]
        return item

    def at_end(self) -> bool:
        if self._peeked is None:
            self._peeked = next(self._it, None)
        return self._peeked is None


def _keyword_int(cur: _Cursor, key: str) -> int:
    lineno, toks = cur.next(f"'{key} <int>'")
    if toks[0][0] != key:
        raise ParseError(f"expected '{key} <int>', found {toks[0][0]!r}", lineno, toks[0][1])
    if len(toks) != 2:
        col = toks[2][1] if len(toks) > 2 else toks[0][1] + len(key)
        raise ParseError(f"'{key}' takes exactly one integer", lineno, col)
    val = _int(toks[1][0], lineno, toks[1][1])
    if val < 0:
        raise ParseError(f"{key} must be non-negative", lineno, toks[1][1])
    return val


def _block(cur: _Cursor, name: str, nrows: int, ncols: int) -> list[list[int]]:
    lineno, toks = cur.next(f"'{name}' block header")
    if len(toks) != 1 or toks[0][0] != name:
        raise ParseError(f"expected '{name}' block header, found {' '.join(t for t, _ in toks)!r}",
                         lineno, toks[0][1])
    rows = []
    for r in range(nrows):
        lineno, toks = cur.next(f"row {r + 1} of block {name}")
        if len(toks) == 1 and toks[0][0].isalpha():
            raise ParseError(f"block {name} has {r} rows, expected {nrows}", lineno, toks[0][1])
        if len(toks) != ncols:
            col = toks[ncols][1] if len(toks) > ncols else toks[-1][1]
            raise ParseError(f"block {name} row {r + 1} has {len(toks)} entries, expected {ncols}",
                             lineno, col)
        rows.append([_int(t, lineno, c) for t, c in toks])
    return rows


def parse_raw(text: str) -> tuple[int, int, list, list, list]:
    """Syntax-only parse; returns ``(g, m, M, V, A)`` as nested lists."""
    cur = _Cursor(text)
    lineno, toks = cur.next(f"'{HEADER}'")
    if " ".join(t for t, _ in toks) != HEADER:
        raise ParseError(f"first line must be '{HEADER}'", lineno, toks[0][1])
    g = _keyword_int(cur, "g")
    m = _keyword_int(cur, "m")
    if g:
        M = _block(cur, "M", 2 * g, 2 * g)
        V = _block(cur, "V", m, 2 * g)
    else:
        M, V = [], [[] for _ in range(m)]
    A = _block(cur, "A", m, m)
    if not cur.at_end():
        lineno, toks = cur.next("end of input")
        raise ParseError(f"unexpected content after block A: {toks[0][0]!r}", lineno, toks[0][1])
    return g, m, M, V, A


def parse(text: str) -> SeifertData:
    """Parse and validate.  Raises :class:`ParseError` for syntax problems and
    :class:`~seifertkit.seifert.SeifertValidationError` for invalid data."""
    return validate(*parse_raw(text))


def render_document(d: SeifertData) -> str:
    out = [HEADER, f"g {d.g}", f"m {d.m}"]
    if d.g:
        out.append("M")
        out.extend(" ".join(str(x) for x in r) for r in d.M.rows)
        out.append("V")
        out.extend(" ".join(str(x) for x in r) for r in d.V.rows)
    out.append("A")
    out.extend(" ".join(str(x) for x in r) for r in d.A.rows)
    return "\n".join(out) + "\n"
