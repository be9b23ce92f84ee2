"""Verification reports and the exact comparison used by every check."""

from __future__ import annotations

import json
import random
import time
import zlib
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable

from .exactq import RationalFunction, eval_q_at


def _value_json(v) -> Any:
    if v is None:
        return None
    if hasattr(v, "to_json_obj"):
        return v.to_json_obj()
    if isinstance(v, (int, bool)):
        return v
    if isinstance(v, Fraction):
        return str(v)
    return repr(v)


def _sample_points(seed: int, count: int = 3) -> list[Fraction]:
    rng = random.Random(seed)
    return [Fraction(rng.randint(2, 97), rng.randint(2, 97)) for _ in range(count)]


def _probe(f: RationalFunction, v: Fraction):
    try:
        return eval_q_at(f, v)
    except ValueError:
        return None


def exact_equal(a, b, fast_filter: bool = False, seed: int = 0) -> bool:
    """Exact equality; optionally reject early on a random-rational mismatch."""
    if fast_filter and isinstance(a, RationalFunction) and isinstance(b, RationalFunction):
        for v in _sample_points(seed):
            x, y = _probe(a, v), _probe(b, v)
            if x is not None and y is not None and x != y:
                return False
    return a == b


@dataclass
class Instance:
    identity: str
    params: dict
    passed: bool
    lhs: Any = None
    rhs: Any = None
    elapsed_ms: float | None = None
    note: str | None = None

    def to_json_obj(self, timings: bool = False) -> dict:
        obj: dict = {
            "identity": self.identity,
            "params": self.params,
            "status": "pass" if self.passed else "fail",
        }
        if not self.passed:
            obj["lhs"] = _value_json(self.lhs)
            obj["rhs"] = _value_json(self.rhs)
        if self.note:
            obj["note"] = self.note
        if timings and self.elapsed_ms is not None:
            obj["elapsed_ms"] = round(self.elapsed_ms, 3)
        return obj


def check(identity: str, params: dict, lhs_fn: Callable[[], Any], rhs_fn: Callable[[], Any],
          fast_filter: bool = False) -> Instance:
    """Evaluate both sides and compare exactly; exceptions become failures."""
    t0 = time.perf_counter()
    try:
        lhs = lhs_fn()
        rhs = rhs_fn()
        ok = exact_equal(lhs, rhs, fast_filter, seed=zlib.crc32(json.dumps(params, sort_keys=True).encode()))
        note = None
    except Exception as exc:  # a crash is a failed instance, not a crashed suite
        lhs = rhs = None
        ok = False
        note = f"{type(exc).__name__}: {exc}"
    return Instance(identity, params, ok, lhs, rhs, (time.perf_counter() - t0) * 1000, note)


def check_true(identity: str, params: dict, fn: Callable[[], bool]) -> Instance:
    t0 = time.perf_counter()
    try:
        ok = bool(fn())
        note = None
    except Exception as exc:
        ok = False
        note = f"{type(exc).__name__}: {exc}"
    return Instance(identity, params, ok, elapsed_ms=(time.perf_counter() - t0) * 1000, note=note)


@dataclass
class VerificationReport:
    suite: str
    params: dict = field(default_factory=dict)
    instances: list[Instance] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(i.passed for i in self.instances)

    @property
    def failures(self) -> list[Instance]:
        return [i for i in self.instances if not i.passed]

    def extend(self, other: "VerificationReport | list[Instance]") -> None:
        self.instances.extend(other.instances if isinstance(other, VerificationReport) else other)

    def summary(self) -> dict:
        by_identity: dict[str, list[int]] = {}
        for inst in self.instances:
            tally = by_identity.setdefault(inst.identity, [0, 0])
            tally[0 if inst.passed else 1] += 1
        return {
            "total": len(self.instances),
            "passed": sum(1 for i in self.instances if i.passed),
            "failed": len(self.failures),
            "by_identity": {k: {"pass": v[0], "fail": v[1]} for k, v in sorted(by_identity.items())},
        }

    def to_json_obj(self, timings: bool = False) -> dict:
        return {
            "suite": self.suite,
            "params": self.params,
            "status": "pass" if self.passed else "fail",
            "summary": self.summary(),
            "instances": [i.to_json_obj(timings) for i in self.instances],
        }

    def to_json(self, timings: bool = False) -> str:
        return json.dumps(self.to_json_obj(timings), indent=1, sort_keys=False)
