import time

import pytest

from promptdiff.codegen import GeneratedProgram
from promptdiff.executor import GRACE, OutcomeMatrix, execute, fill_matrix
from promptdiff.fuzz import TestInput


def prog(source, entry_point="f", **kw):
    defaults = dict(origin="target", para_index=None, prompt_digest="")
    defaults.update(kw)
    return GeneratedProgram(source=source, entry_point=entry_point, **defaults)


def arg(*args):
    return TestInput(args=args, index=0)


ROLLING_MAX_SRC = (
    "def rolling_max(numbers):\n    out = []\n    cur = None\n"
    "    for n in numbers:\n        cur = n if cur is None else max(cur, n)\n"
    "        out.append(cur)\n    return out\n"
)


class TestExecute:
    def test_value(self):
        out = execute(prog(ROLLING_MAX_SRC, "rolling_max"),
                      arg([1, 2, 3, 2, 3, 4, 2]), budget=5.0)
        assert out.status == "value"
        assert out.value == [1, 2, 3, 3, 3, 4, 4]

    def test_dead_loop_times_out_within_budget_plus_grace(self):
        start = time.monotonic()
        out = execute(prog("def f(x):\n    while True:\n        pass\n"),
                      arg(0), budget=2.0)
        elapsed = time.monotonic() - start
        assert out.status == "timeout"
        assert elapsed <= 2.0 + GRACE

    def test_raised_kind(self):
        out = execute(prog("def f(x):\n    return x / 0\n"), arg(1), budget=5.0)
        assert out.status == "raised"
        assert out.kind == "ZeroDivisionError"

    def test_syntax_error_is_unrunnable(self):
        out = execute(prog("def f(x:\n"), arg(1), budget=5.0)
        assert out.status == "unrunnable"
        assert out.kind == "SyntaxError"

    def test_unrunnable_program_never_spawns(self):
        p = prog("", unrunnable_reason="no code")
        out = execute(p, arg(1), budget=5.0)
        assert out.status == "unrunnable"
        assert out.reason == "no code"

    def test_candidate_stdout_cannot_corrupt_protocol(self):
        out = execute(prog('def f(x):\n    print("{\\"status\\": \\"value\\"}")\n'
                           "    return 7\n"), arg(0), budget=5.0)
        assert out.status == "value"
        assert out.value == 7

    def test_tuple_and_set_canonicalized(self):
        out = execute(prog("def f(x):\n    return (x, {3, 1})\n"), arg(5), budget=5.0)
        assert out.value == [5, [1, 3]]

    def test_budget_must_be_positive(self):
        with pytest.raises(ValueError):
            execute(prog("def f(x):\n    return x\n"), arg(1), budget=0)


class TestFillMatrix:
    def test_cardinality(self):
        suite = [TestInput(args=(i,), index=i) for i in range(4)]
        target = prog("def f(x):\n    return x\n")
        paras = [prog("def f(x):\n    return x\n", origin="paraphrase",
                      para_index=i) for i in range(2)]
        m = fill_matrix(target, paras, suite, budget=5.0)
        assert len(m.cells) == 3
        assert all(len(row) == 4 for row in m.cells)
        assert all(out is not None for row in m.cells for out in row)

    def test_identical_programs_identical_rows(self):
        suite = [TestInput(args=(i,), index=i) for i in range(3)]
        src = "def f(x):\n    return x * x\n"
        m = fill_matrix(prog(src), [prog(src, origin="paraphrase", para_index=0)],
                        suite, budget=5.0)
        assert [o.value for o in m.cells[0]] == [o.value for o in m.cells[1]]

    def test_isolation_siblings_unaffected(self):
        # one looping, one raising, one broken candidate in the same matrix
        suite = [TestInput(args=(1,), index=0)]
        target = prog("def f(x):\n    return x\n")
        paras = [
            prog("def f(x):\n    while True:\n        pass\n",
                 origin="paraphrase", para_index=0),
            prog("def f(x):\n    raise RuntimeError('boom')\n",
                 origin="paraphrase", para_index=1),
            prog("def f(x:\n", origin="paraphrase", para_index=2),
        ]
        m = fill_matrix(target, paras, suite, budget=2.0)
        assert m.target_row[0].status == "value"
        assert m.target_row[0].value == 1
        assert [row[0].status for row in m.paraphrase_rows] == \
            ["timeout", "raised", "unrunnable"]

    def test_empty_suite_rejected(self):
        with pytest.raises(ValueError):
            fill_matrix(prog("def f():\n    pass\n"), [], [], budget=1.0)
