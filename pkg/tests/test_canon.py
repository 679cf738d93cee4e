import math

from hypothesis import given, strategies as st

from promptdiff import canon
from promptdiff import runner


def values(max_leaves=20):
    leaves = st.one_of(
        st.none(), st.booleans(), st.integers(-10**6, 10**6),
        st.floats(allow_nan=False, allow_infinity=False, width=32),
        st.text(max_size=8),
    )
    return st.recursive(
        leaves,
        lambda inner: st.one_of(
            st.lists(inner, max_size=4),
            st.dictionaries(st.one_of(st.integers(-9, 9), st.text(max_size=3)),
                            inner, max_size=3),
        ),
        max_leaves=max_leaves,
    )


def test_canonicalize_tuples_sets_objects():
    assert canon.canonicalize((1, 2)) == [1, 2]
    assert canon.canonicalize({3, 1, 2}) == [1, 2, 3]
    assert canon.canonicalize({"b": (1,), "a": {2}}) == {"b": [1], "a": [2]}

    class Thing:
        def __repr__(self):
            return "Thing()"

    assert canon.canonicalize(Thing()) == "<Thing> Thing()"


def test_dict_keys_sorted_by_serialized_form():
    a = canon.dumps({2: "x", 1: "y", "1": "z"})
    b = canon.dumps({"1": "z", 1: "y", 2: "x"})
    assert a == b
    # int and str keys stay distinct after encoding
    assert canon.loads(a) == {1: "y", 2: "x", "1": "z"}


@given(values())
def test_dumps_loads_roundtrip(v):
    assert canon.equal(canon.loads(canon.dumps(v)), v)


@given(values())
def test_equal_values_byte_equal_serialization(v):
    assert canon.dumps(v) == canon.dumps(canon.loads(canon.dumps(v)))


def test_float_tolerance():
    assert canon.equal(1.0, 1.0 + 5e-7)
    assert not canon.equal(1.0, 1.01)
    assert canon.equal(1e9, 1e9 * (1 + 1e-7))
    assert canon.equal(float("nan"), float("nan"))
    assert canon.equal(float("inf"), float("inf"))
    assert not canon.equal(float("inf"), float("-inf"))


def test_kinds_are_distinct():
    assert not canon.equal(1, 1.0)
    assert not canon.equal(1, True)
    assert not canon.equal(0.0, False)
    assert not canon.equal([1], [1.0])


def test_structural_containers():
    assert canon.equal([[1.0, 2.0]], [[1.0 + 1e-9, 2.0]])
    assert canon.equal({"a": 0.5}, {"a": 0.5 + 1e-9})
    assert not canon.equal({"a": 1}, {"b": 1})


def test_runner_mirrors_canon():
    # the standalone shim must canonicalize and serialize identically
    samples = [
        None, True, 0, -3, 2.5, "x",
        (1, (2, 3)), {3, 1}, {"k": (1.5, None)}, {1: "a", "1": "b"},
        [float("inf")],
    ]
    for s in samples:
        ours = canon._encode(canon.canonicalize(s))
        theirs = runner._encode(runner._canonicalize(s))
        assert ours == theirs
        assert canon.dumps(canon.canonicalize(s)) == runner._dumps(
            runner._canonicalize(s))
