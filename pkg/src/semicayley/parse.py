"""Parsers for group specs (``Z10xZ2``) and element sets (``(1,0),(3,0)``)."""

from __future__ import annotations

import re

from .abelian import AbelianGroup, Element, make_group
from .errors import InvalidElementError, ParseError

_FACTOR = re.compile(r"[Zz](\d+)")


def parse_group(text: str) -> AbelianGroup:
    """``Z4``, ``Z4xZ2``, ``Z2xZ2xZ4``; whitespace around ``x`` is ignored."""
    factors = []
    pos = 0
    s = text
    while True:
        while pos < len(s) and s[pos].isspace():
            pos += 1
        m = _FACTOR.match(s, pos)
        if not m:
            raise ParseError("expected a factor like 'Z4'", text, pos)
        n = int(m.group(1))
        if n < 2:
            raise ParseError(f"cyclic factor Z{n} must have order >= 2", text, m.start(1))
        factors.append(n)
        pos = m.end()
        while pos < len(s) and s[pos].isspace():
            pos += 1
        if pos == len(s):
            break
        if s[pos] not in "x*":
            raise ParseError("expected 'x' between factors", text, pos)
        pos += 1
    return make_group(factors)


def parse_element(text: str, group: AbelianGroup | None = None, offset: int = 0) -> Element:
    """``(c1,c2,...)``; a bare integer is accepted for cyclic groups.

    Coordinates are reduced modulo the factors when ``group`` is given, so
    ``(-1)`` in ``Z4`` is ``(3,)``.
    """
    s = text.strip()
    lead = len(text) - len(text.lstrip())
    if re.fullmatch(r"-?\d+", s):
        coords = [int(s)]
    else:
        if not (s.startswith("(") and s.endswith(")")):
            raise ParseError("element must look like '(c1,c2,...)'", text, lead)
        inner = s[1:-1]
        coords = []
        col = lead + 1
        for part in inner.split(","):
            if not re.fullmatch(r"\s*-?\d+\s*", part):
                raise ParseError("coordinate must be an integer", text, col)
            coords.append(int(part))
            col += len(part) + 1
    if group is None:
        return tuple(coords)
    if len(coords) != group.rank:
        raise ParseError(f"{group.name} elements need {group.rank} coordinates, got {len(coords)}", text, lead)
    x = tuple(c % f for c, f in zip(coords, group.factors))
    try:
        return group.check(x)
    except InvalidElementError as exc:
        raise ParseError(str(exc), text, lead) from None


def parse_element_set(text: str, group: AbelianGroup | None = None) -> frozenset[Element]:
    """Comma-separated element literals, optionally wrapped in braces; empty means the empty set."""
    s = text
    start, end = 0, len(s)
    stripped = s.strip()
    if stripped.startswith("{") and stripped.endswith("}"):
        start = s.index("{") + 1
        end = s.rindex("}")
    out = []
    depth = 0
    tok_start = start
    for i in range(start, end + 1):
        ch = s[i] if i < end else ","
        if ch == "(":
            if depth:
                raise ParseError("nested parenthesis", text, i)
            depth = 1
        elif ch == ")":
            if not depth:
                raise ParseError("unbalanced ')'", text, i)
            depth = 0
        elif ch == "," and depth == 0:
            token = s[tok_start:i]
            if token.strip():
                try:
                    out.append(parse_element(token, group))
                except ParseError as exc:
                    raise ParseError(exc.message, text, tok_start + exc.position) from None
            elif i < end:
                raise ParseError("empty element", text, i)
            tok_start = i + 1
    if depth:
        raise ParseError("unclosed '('", text, end)
    return frozenset(out)
