"""Single-shot subprocess shim: load a candidate source, call it, reply once.

Protocol (one line in, one line out):
  request : {"source": str, "entry_point": str, "args": [canonical...]}
  reply   : {"status": "value", "value": ...}
          | {"status": "raised", "kind": str, "message": str}
          | {"status": "load_error", "kind": str, "message": str}

The reply is compact JSON with sorted keys so identical results are
byte-identical. Candidate stdout is redirected to stderr so it can never
corrupt the protocol stream.

This module is deliberately self-contained (stdlib only, no package imports):
the executor spawns it with ``python -S -E`` once per executed cell, so import
cost is the dominant term. Its canonicalization must stay in lockstep with
``promptdiff.canon``; a test asserts the two agree.
"""

from __future__ import annotations

import contextlib
import json
import sys


def _canonicalize(obj):
    """tuple -> list, set -> sorted list, unknown objects -> tagged repr."""
    if obj is None or isinstance(obj, (bool, int, float, str)):
        return obj
    if isinstance(obj, (list, tuple)):
        return [_canonicalize(x) for x in obj]
    if isinstance(obj, (set, frozenset)):
        return sorted((_canonicalize(x) for x in obj), key=_dumps)
    if isinstance(obj, dict):
        return {_canonicalize(k): _canonicalize(v) for k, v in obj.items()}
    return "<%s> %r" % (type(obj).__name__, obj)


def _encode(value):
    if isinstance(value, dict):
        return {_dumps(k): _encode(v) for k, v in value.items()}
    if isinstance(value, list):
        return [_encode(v) for v in value]
    return value


def _decode(value):
    if isinstance(value, dict):
        return {json.loads(k): _decode(v) for k, v in value.items()}
    if isinstance(value, list):
        return [_decode(v) for v in value]
    return value


def _dumps(value):
    return json.dumps(_encode(value), sort_keys=True, separators=(",", ":"))


def run_once(request: dict) -> dict:
    source = request["source"]
    entry_point = request["entry_point"]
    args = _decode(request["args"])

    namespace: dict = {}
    try:
        exec(compile(source, "<candidate>", "exec"), namespace)
    except BaseException as exc:
        return {"status": "load_error", "kind": type(exc).__name__, "message": str(exc)}
    fn = namespace.get(entry_point)
    if not callable(fn):
        return {"status": "load_error", "kind": "MissingEntryPoint",
                "message": "no callable named %r" % entry_point}
    try:
        result = fn(*args)
    except KeyboardInterrupt:
        raise
    except BaseException as exc:
        return {"status": "raised", "kind": type(exc).__name__, "message": str(exc)}
    return {"status": "value", "value": _encode(_canonicalize(result))}


def main() -> int:
    line = sys.stdin.readline()
    try:
        request = json.loads(line)
        if not isinstance(request, dict) or "source" not in request \
                or "entry_point" not in request or "args" not in request:
            raise ValueError("request missing required fields")
    except ValueError as exc:
        print("malformed request: %s" % exc, file=sys.stderr)
        return 2

    stdout = sys.stdout
    with contextlib.redirect_stdout(sys.stderr):
        reply = run_once(request)
    stdout.write(json.dumps(reply, sort_keys=True, separators=(",", ":")) + "\n")
    stdout.flush()
    return 0


if __name__ == "__main__":
    sys.exit(main())
