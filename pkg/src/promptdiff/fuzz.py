"""Seeded, type-directed test-input generation for a function signature.

Two tiers: a deterministic boundary tier first (empty containers, zero, one,
minus one, single-element containers, empty string), then seeded random values
until the suite cap is reached. Identical (signature, config) always yields
identical suites.
"""

from __future__ import annotations

import random
import string
from dataclasses import dataclass, field
from typing import Any

from . import canon
from .prompts import FunctionSignature, TypeExpr


class UnsupportedType(Exception):
    """A parameter's type is outside the generator's grammar and not Any."""


@dataclass(frozen=True)
class FuzzConfig:
    seed: int = 0
    max_inputs: int = 20
    max_container_len: int = 8
    int_range: tuple[int, int] = (-1000, 1000)
    float_range: tuple[float, float] = (-1e3, 1e3)
    max_str_len: int = 12


@dataclass(frozen=True)
class TestInput:
    args: tuple[Any, ...]
    index: int


_STR_ALPHABET = string.ascii_lowercase + string.digits + " "


def boundary_values(t: TypeExpr) -> list[Any]:
    if t.kind == "int":
        return [0, 1, -1]
    if t.kind == "float":
        return [0.0, 1.0, -1.0]
    if t.kind == "bool":
        return [False, True]
    if t.kind == "str":
        return ["", "a"]
    if t.kind == "list":
        return [[], [boundary_values(t.args[0])[0]]]
    if t.kind == "tuple":
        return [[boundary_values(a)[0] for a in t.args]]
    if t.kind == "optional":
        return [None] + boundary_values(t.args[0])[:1]
    if t.kind == "dict":
        k0 = boundary_values(t.args[0])[0]
        return [{}, {k0: boundary_values(t.args[1])[0]}]
    if t.kind == "any":
        return [None, 0, ""]
    raise UnsupportedType(t.render())


def random_value(t: TypeExpr, rng: random.Random, cfg: FuzzConfig) -> Any:
    if t.kind == "int":
        return rng.randint(*cfg.int_range)
    if t.kind == "float":
        return round(rng.uniform(*cfg.float_range), 2)
    if t.kind == "bool":
        return rng.random() < 0.5
    if t.kind == "str":
        n = rng.randint(0, cfg.max_str_len)
        return "".join(rng.choice(_STR_ALPHABET) for _ in range(n))
    if t.kind == "list":
        n = rng.randint(0, cfg.max_container_len)
        return [random_value(t.args[0], rng, cfg) for _ in range(n)]
    if t.kind == "tuple":
        return [random_value(a, rng, cfg) for a in t.args]
    if t.kind == "optional":
        if rng.random() < 0.2:
            return None
        return random_value(t.args[0], rng, cfg)
    if t.kind == "dict":
        n = rng.randint(0, cfg.max_container_len)
        out = {}
        for _ in range(n):
            out[random_value(t.args[0], rng, cfg)] = random_value(t.args[1], rng, cfg)
        return out
    if t.kind == "any":
        leaf = rng.choice(["int", "str", "bool", "float"])
        return random_value(TypeExpr(leaf), rng, cfg)
    raise UnsupportedType(t.render())


def conforms(value: Any, t: TypeExpr) -> bool:
    """Recursive conformance of a canonical value to a type tree."""
    if t.kind == "any":
        return True
    if t.kind == "int":
        return isinstance(value, int) and not isinstance(value, bool)
    if t.kind == "float":
        return isinstance(value, float)
    if t.kind == "bool":
        return isinstance(value, bool)
    if t.kind == "str":
        return isinstance(value, str)
    if t.kind == "list":
        return isinstance(value, list) and all(conforms(v, t.args[0]) for v in value)
    if t.kind == "tuple":
        return (isinstance(value, list) and len(value) == len(t.args)
                and all(conforms(v, a) for v, a in zip(value, t.args)))
    if t.kind == "optional":
        return value is None or conforms(value, t.args[0])
    if t.kind == "dict":
        return isinstance(value, dict) and all(
            conforms(k, t.args[0]) and conforms(v, t.args[1])
            for k, v in value.items()
        )
    return False


def generate_inputs(sig: FunctionSignature, cfg: FuzzConfig = FuzzConfig()) -> list[TestInput]:
    """Emit up to cfg.max_inputs argument tuples for the signature."""
    types = [t for _, t in sig.params]
    for t in types:
        if not t.supported:
            raise UnsupportedType(t.render())

    suite: list[tuple[Any, ...]] = []
    seen: set[str] = set()

    def push(args: tuple[Any, ...]) -> None:
        key = canon.dumps(list(args))
        if key not in seen and len(suite) < cfg.max_inputs:
            seen.add(key)
            suite.append(args)

    if not types:
        push(())
    else:
        per_param = [boundary_values(t) for t in types]
        depth = max(len(b) for b in per_param)
        for i in range(depth):
            push(tuple(b[min(i, len(b) - 1)] for b in per_param))
        rng = random.Random(cfg.seed)
        attempts = 0
        while len(suite) < cfg.max_inputs and attempts < cfg.max_inputs * 20:
            attempts += 1
            push(tuple(canon.canonicalize(random_value(t, rng, cfg)) for t in types))

    return [TestInput(args=args, index=i) for i, args in enumerate(suite)]
