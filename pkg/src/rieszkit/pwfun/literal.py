"""Text form of piecewise functions.

``pw{domain=[a,b]; breaks=[r0,...,rk]; pieces=[poly[...],...]}``; breakpoints
in outputs may be ``alg{poly=[...], lo=, hi=}``.
"""

from __future__ import annotations

import re

from ..exceptions import ParseError, RieszKitError
from ..numeric import AlgebraicReal, Polynomial, format_rational, parse_rational
from .function import PiecewiseFunction

__all__ = ("parse_pw", "format_pw", "split_top_level")

_PW_RE = re.compile(
    r"^\s*pw\s*\{\s*domain\s*=\s*\[(?P<domain>[^\]]*)\]\s*;"
    r"\s*breaks\s*=\s*\[(?P<breaks>.*)\]\s*;"
    r"\s*pieces\s*=\s*\[(?P<pieces>.*)\]\s*\}\s*$",
    re.DOTALL,
)


def split_top_level(text: str, sep: str = ",") -> list[str]:
    """Split on *sep* outside brackets and braces."""
    parts, depth, current = [], 0, []
    for ch in text:
        if ch in "[{(":
            depth += 1
        elif ch in "]})":
            depth -= 1
        if ch == sep and depth == 0:
            parts.append("".join(current).strip())
            current = []
            continue
        current.append(ch)
    tail = "".join(current).strip()
    if tail:
        parts.append(tail)
    return parts


def parse_pw(text: str) -> PiecewiseFunction:
    match = _PW_RE.match(text)
    if not match:
        raise ParseError("Expected pw{domain=[a,b]; breaks=[...]; pieces=[...]}", source=text)
    try:
        domain = [parse_rational(part) for part in split_top_level(match.group("domain"))]
        if len(domain) != 2:
            raise ParseError("Domain needs exactly two endpoints", source=text)
        breaks = [AlgebraicReal.parse(part) for part in split_top_level(match.group("breaks"))]
        pieces = [Polynomial.parse(part) for part in split_top_level(match.group("pieces"))]
        return PiecewiseFunction.from_pieces((domain[0], domain[1]), breaks, pieces)
    except ParseError:
        raise
    except RieszKitError as exc:
        raise ParseError(
            f"Invalid piecewise literal: {exc.message}", source=text, cause=exc
        ) from exc


def format_pw(f: PiecewiseFunction) -> str:
    breaks = ", ".join(b.to_text() for b in f.breakpoints)
    pieces = ", ".join(str(p) for p in f.pieces)
    return (
        f"pw{{domain=[{format_rational(f.lo)}, {format_rational(f.hi)}]; "
        f"breaks=[{breaks}]; pieces=[{pieces}]}}"
    )
