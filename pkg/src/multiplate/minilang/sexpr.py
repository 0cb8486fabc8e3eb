"""S-expression reader and canonical printer.

Grammar::

    sexpr  := atom | '(' sexpr* ')'
    symbol := [A-Za-z_][A-Za-z0-9_]*
    int    := -?[0-9]+
    string := '"' (any byte but '"' or '\\' | '\\"' | '\\\\')* '"'

Whitespace is space, tab, CR or LF.  Lists are tuples, symbols are
:class:`Symbol`, strings are ``str`` and integers are ``int``.
"""

from __future__ import annotations

import re
from typing import Union

_SYMBOL = re.compile(rb"[A-Za-z_][A-Za-z0-9_]*\Z")
_INT = re.compile(rb"-?[0-9]+\Z")
_WHITESPACE = b" \t\r\n"
_DELIMS = _WHITESPACE + b'()"'


class Symbol(str):
    def __repr__(self) -> str:
        return f"Symbol({str.__repr__(self)})"


SExpr = Union[Symbol, int, str, tuple]


class SExprError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at byte offset {offset}")
        self.message = message
        self.offset = offset


def parse_sexpr(text: bytes | str) -> SExpr:
    """Parse exactly one s-expression, surrounded by optional whitespace."""
    data = text.encode("utf-8") if isinstance(text, str) else bytes(text)
    pos = _skip(data, 0)
    if pos == len(data):
        raise SExprError("empty input", pos)
    value, pos = _read(data, pos)
    pos = _skip(data, pos)
    if pos != len(data):
        raise SExprError("trailing garbage", pos)
    return value


def _skip(data: bytes, pos: int) -> int:
    while pos < len(data) and data[pos] in _WHITESPACE:
        pos += 1
    return pos


def _read(data: bytes, pos: int) -> tuple[SExpr, int]:
    # explicit stack so deep nesting cannot hit the recursion limit
    stack: list[tuple[int, list]] = []
    while True:
        pos = _skip(data, pos)
        if pos == len(data):
            if stack:
                raise SExprError("unbalanced parentheses: '(' never closed", stack[-1][0])
            raise SExprError("unexpected end of input", pos)
        c = data[pos]
        if c == ord("("):
            stack.append((pos, []))
            pos += 1
            continue
        if c == ord(")"):
            if not stack:
                raise SExprError("unbalanced parentheses: unexpected ')'", pos)
            _, items = stack.pop()
            value: SExpr = tuple(items)
            pos += 1
        elif c == ord('"'):
            value, pos = _read_string(data, pos)
        else:
            value, pos = _read_atom(data, pos)
        if not stack:
            return value, pos
        stack[-1][1].append(value)


def _read_string(data: bytes, start: int) -> tuple[str, int]:
    out = bytearray()
    pos = start + 1
    while pos < len(data):
        c = data[pos]
        if c == ord('"'):
            try:
                return out.decode("utf-8"), pos + 1
            except UnicodeDecodeError as exc:
                raise SExprError("invalid UTF-8 in string", start + 1 + exc.start) from None
        if c == ord("\\"):
            if pos + 1 < len(data) and data[pos + 1] in b'"\\':
                out.append(data[pos + 1])
                pos += 2
                continue
            if pos + 1 == len(data):
                break
            raise SExprError("invalid escape", pos)
        out.append(c)
        pos += 1
    raise SExprError("unterminated string", start)


def _read_atom(data: bytes, start: int) -> tuple[SExpr, int]:
    pos = start
    while pos < len(data) and data[pos] not in _DELIMS:
        pos += 1
    token = data[start:pos]
    if _INT.match(token):
        return int(token), pos
    if _SYMBOL.match(token):
        return Symbol(token.decode("ascii")), pos
    raise SExprError(f"invalid atom {token.decode('utf-8', 'replace')!r}", start)


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def print_sexpr(s: SExpr) -> str:
    """Canonical form: single spaces, no newlines."""
    if isinstance(s, Symbol):
        return str(s)
    if isinstance(s, bool):
        raise TypeError("booleans are not s-expression atoms")
    if isinstance(s, int):
        return str(s)
    if isinstance(s, str):
        return _quote(s)
    if isinstance(s, (tuple, list)):
        return "(" + " ".join(print_sexpr(x) for x in s) + ")"
    raise TypeError(f"not an s-expression: {s!r}")
