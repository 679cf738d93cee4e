/**
 * Embedded Python bootstrap executed with `python3 -S -E -c` for each request.
 *
 * It loads the candidate source in a fresh namespace, calls the entry point
 * on the decoded arguments, and prints exactly one reply line. Candidate
 * stdout is redirected to stderr so it can never corrupt the protocol stream.
 *
 * Canonicalization must match the executor's value policy byte-for-byte:
 * tuple -> list, set -> sorted list, unknown objects -> tagged repr, dict
 * keys replaced by their own canonical serialization, compact sorted-key
 * JSON. The golden battery in test/runner.test.ts pins the exact reply
 * bytes (including Python float formatting such as `1.0`), which is why
 * the reply is produced here and relayed verbatim rather than re-serialized
 * in JavaScript.
 */

export const BOOTSTRAP: string = String.raw`
import contextlib
import json
import sys


def _canonicalize(obj):
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


def run_once(request):
    source = request["source"]
    entry_point = request["entry_point"]
    args = _decode(request["args"])

    namespace = {}
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


def main():
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


sys.exit(main())
`;
