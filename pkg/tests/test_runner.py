"""Protocol-level tests driving the runner shim as a real subprocess."""

import json
import subprocess

from promptdiff.executor import default_runner_cmd


def call_runner(request_obj=None, raw=None):
    line = raw if raw is not None else json.dumps(request_obj)
    proc = subprocess.run(default_runner_cmd(), input=line + "\n",
                          capture_output=True, text=True, timeout=30)
    return proc


def reply_of(source, entry_point, args):
    proc = call_runner({"source": source, "entry_point": entry_point, "args": args})
    assert proc.returncode == 0, proc.stderr
    lines = proc.stdout.splitlines()
    assert len(lines) == 1, "exactly one reply line expected: %r" % proc.stdout
    return lines[0]


def test_value_reply():
    line = reply_of(
        "def rolling_max(numbers):\n"
        "    out = []\n    cur = None\n"
        "    for n in numbers:\n"
        "        cur = n if cur is None else max(cur, n)\n"
        "        out.append(cur)\n    return out\n",
        "rolling_max", [[1, 2, 3, 2, 3, 4, 2]])
    assert json.loads(line) == {"status": "value", "value": [1, 2, 3, 3, 3, 4, 4]}


def test_null_return():
    line = reply_of("def f():\n    return None\n", "f", [])
    assert json.loads(line) == {"status": "value", "value": None}


def test_raised_kind():
    line = reply_of("def f(x):\n    return x / 0\n", "f", [1])
    rep = json.loads(line)
    assert rep["status"] == "raised"
    assert rep["kind"] == "ZeroDivisionError"


def test_load_error():
    line = reply_of("def f(:\n", "f", [])
    assert json.loads(line)["status"] == "load_error"


def test_missing_entry_point_is_load_error():
    rep = json.loads(reply_of("def g():\n    pass\n", "f", []))
    assert rep["status"] == "load_error"
    assert rep["kind"] == "MissingEntryPoint"


def test_malformed_request_nonzero_exit():
    proc = call_runner(raw="{not json")
    assert proc.returncode != 0
    assert proc.stdout == ""
    assert proc.stderr.strip()

    proc = call_runner({"source": "x"})  # missing fields
    assert proc.returncode != 0


def test_reply_is_compact_sorted_json():
    line = reply_of("def f():\n    return {'b': 1, 'a': 2.5}\n", "f", [])
    assert line == '{"status":"value","value":{"\\"a\\"":2.5,"\\"b\\"":1}}'
