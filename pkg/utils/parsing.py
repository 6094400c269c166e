"""
Command-line token parsing: coordinate lists, ranges.
"""
import re
from fractions import Fraction
from typing import Tuple

from services.cartan import Weight

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")
_RANGE_RE = re.compile(r"^([+-]?\d+)\.\.([+-]?\d+)$")


class UsageError(Exception):
    """Malformed command line; maps to exit code 2."""


def parse_rational(token: str) -> Fraction:
    """
    Parse an integer or a ``p/q`` token.

    Raises:
        UsageError: If the token is malformed or has a zero denominator.
    """
    token = token.strip()
    if not _RATIONAL_RE.match(token):
        raise UsageError(f"malformed coordinate {token!r}")
    try:
        return Fraction(token)
    except ZeroDivisionError:
        raise UsageError(f"zero denominator in {token!r}")


def parse_coords(text: str, integer: bool = False) -> Weight:
    """
    Parse a comma-separated coordinate list such as ``1,-2`` or ``1/2,0``.

    Args:
        text: Raw argument.
        integer: Reject non-integer coordinates.

    Raises:
        UsageError: On empty entries ("1,,2"), malformed tokens, or rationals
            where integers are required.
    """
    tokens = text.split(",")
    if any(not t.strip() for t in tokens):
        raise UsageError(f"malformed coordinate list {text!r}")
    coords = tuple(parse_rational(t) for t in tokens)
    if integer and any(c.denominator != 1 for c in coords):
        raise UsageError(f"integer coordinates required, got {text!r}")
    return Weight(coords)


def parse_range(text: str) -> Tuple[int, int]:
    """
    Parse an inclusive ``lo..hi`` range.

    Raises:
        UsageError: If malformed or empty.
    """
    m = _RANGE_RE.match(text.strip())
    if not m:
        raise UsageError(f"malformed range {text!r}, expected lo..hi")
    lo, hi = int(m.group(1)), int(m.group(2))
    if lo > hi:
        raise UsageError(f"empty range {text!r}")
    return lo, hi
