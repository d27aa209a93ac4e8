"""JSON encoding of exact values and geometric objects.

Rationals travel as strings (``"-2"``, ``"3/7"``); a point is an array of
such strings and a line is a two-point array.  Plain JSON integers are
accepted on input, floats never.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Any

from .errors import DimensionError
from .projective import PLine, PPoint
from .quadric3 import QuadricConstraint


SCALAR_PATTERN = re.compile(r"-?[0-9]+(/[0-9]*[1-9][0-9]*)?")


class InputError(ValueError):
    """Malformed instance file."""


def encode_scalar(x) -> str:
    return str(Fraction(x))


def decode_scalar(x) -> Fraction:
    if isinstance(x, bool) or isinstance(x, float):
        raise InputError(f"inexact or non-numeric coordinate {x!r}; use an integer or a 'p/q' string")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str) and SCALAR_PATTERN.fullmatch(x):
        return Fraction(x)
    raise InputError(f"not an exact rational: {x!r}")


def encode_point(p) -> list[str]:
    coords = p.coords if isinstance(p, PPoint) else p
    return [encode_scalar(x) for x in coords]


def decode_point(obj, dim: int | None = None) -> PPoint:
    if not isinstance(obj, list) or not obj:
        raise InputError(f"a point is a nonempty array of coordinates, got {obj!r}")
    coords = [decode_scalar(x) for x in obj]
    if not any(coords):
        raise InputError("the zero vector is not a projective point")
    p = PPoint(coords)
    if dim is not None and p.dim != dim:
        raise InputError(f"expected a point of P^{dim}, got P^{p.dim}")
    return p


def encode_line(line: PLine) -> list[list[str]]:
    return [encode_point(line.a), encode_point(line.b)]


def decode_line(obj, dim: int | None = None) -> PLine:
    if not isinstance(obj, list) or len(obj) != 2:
        raise InputError(f"a line is an array of two points, got {obj!r}")
    a, b = decode_point(obj[0], dim), decode_point(obj[1], dim)
    if a.dim != b.dim:
        raise InputError("line endpoints live in different spaces")
    if a == b:
        raise InputError(f"line endpoints coincide: {a}")
    return PLine(a, b)


def encode_constraint(c: QuadricConstraint) -> dict[str, Any]:
    if c.kind == "point":
        return {"point": encode_point(c.payload)}
    if c.kind == "line":
        return {"line": encode_line(c.payload)}
    return {"curve_points": [encode_point(p) for p in c.payload]}


def decode_constraint(obj, dim: int | None = None) -> QuadricConstraint:
    if not isinstance(obj, dict) or len(obj) != 1:
        raise InputError(f"a constraint is an object with exactly one of point/line/curve_points, got {obj!r}")
    (kind, payload), = obj.items()
    if kind == "point":
        return QuadricConstraint.point(decode_point(payload, dim))
    if kind == "line":
        return QuadricConstraint.line(decode_line(payload, dim))
    if kind == "curve_points":
        if not isinstance(payload, list) or not payload:
            raise InputError("curve_points needs a nonempty array of points")
        return QuadricConstraint.curve_points([decode_point(p, dim) for p in payload])
    raise InputError(f"unknown constraint kind {kind!r}")


def field(doc: dict, key: str):
    if not isinstance(doc, dict):
        raise InputError("instance file must contain a JSON object")
    if key not in doc:
        raise InputError(f"missing field {key!r}")
    return doc[key]


def points_field(doc: dict, key: str, count: int | None = None, dim: int | None = None) -> list[PPoint]:
    raw = field(doc, key)
    if not isinstance(raw, list):
        raise InputError(f"{key!r} must be an array")
    if count is not None and len(raw) != count:
        raise InputError(f"{key!r} must hold {count} points, got {len(raw)}")
    return [decode_point(p, dim) for p in raw]


def lines_field(doc: dict, key: str, count: int | None = None, dim: int | None = None) -> list[PLine]:
    raw = field(doc, key)
    if not isinstance(raw, list):
        raise InputError(f"{key!r} must be an array")
    if count is not None and len(raw) != count:
        raise InputError(f"{key!r} must hold {count} lines, got {len(raw)}")
    return [decode_line(l, dim) for l in raw]


def load(path: str) -> Any:
    import sys
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON: {exc}") from None
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=False)


__all__ = [
    "InputError", "encode_scalar", "decode_scalar", "encode_point", "decode_point",
    "encode_line", "decode_line", "encode_constraint", "decode_constraint",
    "points_field", "lines_field", "field", "load", "dumps", "DimensionError",
]
