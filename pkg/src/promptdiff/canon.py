"""Canonical value trees used to compare program outputs across runs.

A canonical value is a plain Python tree over ``None``, ``bool``, ``int``,
``float``, ``str``, ``list`` and ``dict``.  Tuples become lists, sets become
sorted lists, and mapping keys may be any canonical scalar or container.
Because JSON objects only admit string keys, dicts are encoded with each key
replaced by its own canonical serialization, which makes the encoding
invertible and gives a total order on keys for free.
"""

from __future__ import annotations

import json
import math
from typing import Any

# Relative/absolute tolerance applied when comparing two float leaves.
FLOAT_RTOL = 1e-6
FLOAT_ATOL = 1e-6


def canonicalize(obj: Any) -> Any:
    """Map an arbitrary Python value onto the canonical grammar.

    Values outside the grammar (custom objects, generators, ...) collapse to a
    tagged printable representation so that two programs returning equal such
    objects still compare equal textually.
    """
    if obj is None or isinstance(obj, (bool, int, str)):
        return obj
    if isinstance(obj, float):
        return obj
    if isinstance(obj, (list, tuple)):
        return [canonicalize(x) for x in obj]
    if isinstance(obj, (set, frozenset)):
        items = [canonicalize(x) for x in obj]
        return sorted(items, key=dumps)
    if isinstance(obj, dict):
        return {canonicalize(k): canonicalize(v) for k, v in obj.items()}
    return "<%s> %r" % (type(obj).__name__, obj)


def _encode(value: Any) -> Any:
    """Rewrite a canonical tree into a JSON-safe structure."""
    if isinstance(value, dict):
        return {dumps(k): _encode(v) for k, v in value.items()}
    if isinstance(value, list):
        return [_encode(v) for v in value]
    return value


def _decode(value: Any) -> Any:
    if isinstance(value, dict):
        return {json.loads(k): _decode(v) for k, v in value.items()}
    if isinstance(value, list):
        return [_decode(v) for v in value]
    return value


def dumps(value: Any) -> str:
    """Serialize a canonical value; equal values get byte-equal output."""
    if not isinstance(value, (dict, list)):
        _check_scalar(value)
    return json.dumps(_encode(value), sort_keys=True, separators=(",", ":"))


def loads(text: str) -> Any:
    """Inverse of :func:`dumps` on the canonical grammar."""
    return _decode(json.loads(text))


def _check_scalar(value: Any) -> None:
    if value is not None and not isinstance(value, (bool, int, float, str)):
        raise TypeError("not a canonical scalar: %r" % (value,))


def floats_close(a: float, b: float) -> bool:
    if math.isnan(a) and math.isnan(b):
        return True
    if math.isinf(a) or math.isinf(b):
        return a == b
    return abs(a - b) <= FLOAT_ATOL + FLOAT_RTOL * max(abs(a), abs(b))


def equal(a: Any, b: Any) -> bool:
    """Structural equality with the float tolerance policy.

    Float leaves compare within tolerance; every other leaf kind compares
    exactly, and ``bool``/``int``/``float`` are distinct kinds (``1``,
    ``1.0`` and ``True`` are pairwise unequal).  Dict keys compare exactly.
    """
    if isinstance(a, bool) or isinstance(b, bool):
        return type(a) is type(b) and a == b
    if isinstance(a, float) and isinstance(b, float):
        return floats_close(a, b)
    if type(a) is not type(b):
        return False
    if isinstance(a, list):
        return len(a) == len(b) and all(equal(x, y) for x, y in zip(a, b))
    if isinstance(a, dict):
        if set(map(dumps, a)) != set(map(dumps, b)):
            return False
        bk = {dumps(k): v for k, v in b.items()}
        return all(equal(v, bk[dumps(k)]) for k, v in a.items())
    return a == b
