"""Verification suites over parameter grids.

A suite expands into an ordered list of tasks ``(identity, params)``; each task
is evaluated independently (possibly in a worker process) into an
:class:`~planepart.report.Instance`.  Results are always merged in task order,
so reports do not depend on the number of workers.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from itertools import product
from typing import Callable, Iterator

from . import closedform as cf
from .exactq import ZERO, q_power
from .genfun import (
    F_brute,
    F_brute_general,
    G_brute,
    G_recursion,
    G_value,
    S_function,
    check_linearcombination,
)
from .patterns import gt_enumerate, gt_to_spp, spp_enumerate, spp_to_gt
from .qsymb import QPolynomialK, QQuasiPolynomialK, ext_range_sum, fit_quasi, signed_part
from .report import Instance, VerificationReport, check, check_true

SUITES = (
    "theorem1",
    "zeros",
    "initial",
    "recursion-vs-final",
    "qsums",
    "denominator",
    "bijection",
    "bk",
    "sum-over-p",
    "degree",
    "oracle",
)

FAST_FILTER_DEFAULT = {"theorem1", "qsums"}

Task = tuple[str, dict]


def _sgn(e: int) -> int:
    return -1 if e & 1 else 1


# ---------------------------------------------------------------------------
# task generators


def _tasks_theorem1(max_n, max_c):
    for n in range(1, max_n + 1):
        for c in range(max_c + 1):
            for p in range(n + 1):
                for k in range(-n - 1, c + n + 2):
                    yield "theorem1", {"n": n, "c": c, "p": p, "k": k}


def _tasks_zeros(max_n, max_c):
    for n in range(1, max_n + 1):
        for c in range(max_c + 1):
            for p in range(n + 1):
                for k in [*range(-n + 1, 0), *range(c + 1, c + n)]:
                    yield "zeros brute", {"n": n, "c": c, "p": p, "k": k}
                    yield "zeros closed", {"n": n, "c": c, "p": p, "k": k}


def _tasks_initial(max_n, max_c):
    for n in range(1, max_n + 1):
        for c in range(max_c + 1):
            for p in range(n + 1):
                if p != n:
                    yield "initial k=0", {"n": n, "c": c, "p": p}
                if p != 0:
                    yield "initial k=-n", {"n": n, "c": c, "p": p}
            yield "initial k=1, p=n", {"n": n, "c": c}
            yield "initial k=-n-1, p=0", {"n": n, "c": c}


def _tasks_recursion(max_n, max_c):
    for n in range(1, max_n + 1):
        for c in range(max_c + 1):
            for p in range(n + 1):
                yield "L recursive", {"n": n, "c": c, "p": p}
                yield "M recursive", {"n": n, "c": c, "p": p}


def _tasks_qsums(max_n, max_c):
    for n in range(1, max_n + 2):
        for c in range(max_c + 1):
            if n <= max_n:
                for which in ("0", "-n", "1", "-n-1"):
                    yield "U special", {"n": n, "c": c, "which": which}
                yield "sum U", {"n": n, "c": c}
            yield "sum W", {"n": n, "c": c}
            yield "hypo", {"n": n, "c": c}
            yield "hypo companion", {"n": n, "c": c}


def _tasks_denominator(max_n, max_c):
    for n in range(1, max_n + 1):
        for c in range(max_c + 1):
            for which in ("main", "p0", "pn"):
                yield "denominator", {"n": n, "c": c, "which": which}
            for p in range(n + 1):
                yield "denominator nonzero", {"n": n, "c": c, "p": p}


def _tasks_bijection(max_n, max_c):
    for n in range(1, max_n + 1):
        for c in range(max_c + 1):
            yield "bijection", {"n": n, "c": c}


def _tasks_bk(max_n, max_c):
    for n in range(1, max_n + 1):
        for c in range(max_c + 1):
            for p in range(n + 1):
                yield "G closed", {"n": n, "c": c, "p": p}
            yield "Bender-Knuth", {"n": n, "c": c}


def _tasks_sum_over_p(max_n, max_c):
    for n in range(1, max_n + 1):
        for c in range(max_c + 1):
            yield "sum_p L", {"n": n, "c": c}
            yield "sum_p M", {"n": n, "c": c}


def _tasks_degree(max_n, max_c):
    for n in range(1, max_n + 1):
        for c in range(max_c + 1):
            for p in range(n + 1):
                yield "degree", {"n": n, "c": c, "p": p}
                yield "quasi-form", {"n": n, "c": c, "p": p}


def _tasks_oracle(max_n, max_c):
    for n in range(1, min(max_n, 3) + 1):
        for p in range(n + 1):
            for kv in product((0, 1), repeat=n):
                yield "linear combination", {"n": n, "p": p, "k": list(kv)}
    for n in range(1, min(max_n, 3) + 1):
        for r in range(n + 1):
            for c in range(min(max_c, 3) + 1):
                for p in range(n + 1):
                    for kv in product(range(-2, c + 3), repeat=n - r):
                        yield "row recursion", {"r": r, "n": n, "c": c, "p": p, "k": list(kv)}


_GENERATORS: dict[str, Callable[[int, int], Iterator[Task]]] = {
    "theorem1": _tasks_theorem1,
    "zeros": _tasks_zeros,
    "initial": _tasks_initial,
    "recursion-vs-final": _tasks_recursion,
    "qsums": _tasks_qsums,
    "denominator": _tasks_denominator,
    "bijection": _tasks_bijection,
    "bk": _tasks_bk,
    "sum-over-p": _tasks_sum_over_p,
    "degree": _tasks_degree,
    "oracle": _tasks_oracle,
}


# ---------------------------------------------------------------------------
# task evaluation


def _initial_rhs(identity: str, n: int, c: int, p: int):
    if identity == "initial k=0":
        return G_value(n - 1, c, p)
    if identity == "initial k=-n":
        return q_power(-3 * n * (n - 1) // 2, _sgn(n - 1)) * G_value(n - 1, c + 2, p - 1)
    if identity == "initial k=1, p=n":
        return q_power((n + 2) * (n - 1) // 2) * G_value(n - 1, c - 1, 0)
    return q_power(-(n - 1) * (2 * n + 1), _sgn(n - 1)) * G_value(n - 1, c + 3, n - 1)


_INITIAL_K = {
    "initial k=0": lambda n: 0,
    "initial k=-n": lambda n: -n,
    "initial k=1, p=n": lambda n: 1,
    "initial k=-n-1, p=0": lambda n: -n - 1,
}


def _bijection_ok(n: int, c: int) -> bool:
    seen = set()
    for g in _classical_patterns(n, c):
        s = gt_to_spp(g)
        if spp_to_gt(s, n, c) != g:
            return False
        if s.norm != g.norm or g.inversions != 0:
            return False
        if s.count_eq(n) != g.entry(n, n) or s.odd_rows != g.odd_bottom:
            return False
        seen.add(s.rows)
    for s in spp_enumerate(n, c):
        if s.rows not in seen:
            return False
        if gt_to_spp(spp_to_gt(s, n, c)) != s:
            return False
    return len(seen) == sum(1 for _ in spp_enumerate(n, c))


def _classical_patterns(n: int, c: int):
    for k in range(c + 1):
        yield from gt_enumerate(n - 1, n, c, [k])


def _degree_ok(n: int, c: int, p: int) -> bool:
    bound = 2 * n - 2
    need = 2 * (bound + 1)
    ks = list(range(-n - 1, -n - 1 + need + 3))
    fit_ks, held = ks[:need], ks[need:]
    fit = fit_quasi([(k, F_brute(n, c, p, k)) for k in fit_ks], bound, bound)
    return all(fit.eval(k) == F_brute(n, c, p, k) for k in held)


def run_task(task: Task, fast_filter: bool = False) -> Instance:
    identity, params = task
    n = params.get("n")
    c = params.get("c")
    p = params.get("p")
    if identity == "theorem1":
        k = params["k"]
        return check(identity, params, lambda: cf.F_closed(n, c, p).eval(k), lambda: F_brute(n, c, p, k), fast_filter)
    if identity == "zeros brute":
        return check(identity, params, lambda: F_brute(n, c, p, params["k"]), lambda: ZERO)
    if identity == "zeros closed":
        return check(identity, params, lambda: cf.F_closed(n, c, p).eval(params["k"]), lambda: ZERO)
    if identity in _INITIAL_K:
        pp = p if p is not None else (n if "p=n" in identity else 0)
        k = _INITIAL_K[identity](n)
        return check(identity, params, lambda: F_brute(n, c, pp, k), lambda: _initial_rhs(identity, n, c, pp))
    if identity == "L recursive":
        return check(identity, params, lambda: cf.L_recursive(n, c, p), lambda: cf.L_closed(n, c, p))
    if identity == "M recursive":
        return check(identity, params, lambda: cf.M_recursive(n, c, p), lambda: cf.M_closed(n, c, p))
    if identity == "U special":
        w = params["which"]
        return check(identity, params, lambda: cf.U_at(n, c, cf.special_k(n, w)), lambda: cf.U_special(n, c, w),
                     fast_filter)
    if identity == "sum U":
        return check(identity, params, lambda: ext_range_sum(cf.U_quasi(n, c), 0, c), lambda: cf.sum_U_closed(n, c),
                     fast_filter)
    if identity == "sum W":
        return check(identity, params, lambda: ext_range_sum(QQuasiPolynomialK(cf.W_poly(n, c)), 0, c),
                     lambda: cf.sum_W_closed(n, c), fast_filter)
    if identity == "hypo":
        return check(identity, params, lambda: cf.hypo_lhs(n, c), lambda: cf.hypo_rhs(n, c), fast_filter)
    if identity == "hypo companion":
        return check(identity, params, lambda: cf.hypo_companion_lhs(n, c), lambda: cf.hypo_companion_rhs(n, c),
                     fast_filter)
    if identity == "denominator":
        w = params["which"]
        return check(identity, params, lambda: cf.denominator_lhs(n, c, w), lambda: cf.denominator_closed(n, c, w))
    if identity == "denominator nonzero":
        return check_true(identity, params, lambda: _recursion_denominator(n, c, p) != ZERO)
    if identity == "bijection":
        return check_true(identity, params, lambda: _bijection_ok(n, c))
    if identity == "G closed":
        return check(identity, params, lambda: cf.G_closed(n, c, p), lambda: G_brute(n, c, p))
    if identity == "Bender-Knuth":
        return check(identity, params, lambda: sum((cf.G_closed(n, c, i) for i in range(n + 1)), ZERO),
                     lambda: cf.bk_product(n, c))
    if identity == "sum_p L":
        return check(identity, params, lambda: sum((cf.L_closed(n, c, i) for i in range(n + 1)), ZERO), lambda: ZERO)
    if identity == "sum_p M":
        return check(identity, params, lambda: cf.sum_over_p_M_lhs(n, c), lambda: cf.sum_over_p_M_rhs(n, c))
    if identity == "degree":
        return check_true(identity, params, lambda: _degree_ok(n, c, p))
    if identity == "quasi-form":
        return check(identity, params, lambda: signed_part(cf.F_closed(n, c, p)),
                     lambda: QPolynomialK.monomial(n - 1, cf.L_closed(n, c, p)))
    if identity == "linear combination":
        return check_true(identity, params, lambda: check_linearcombination(n, p, params["k"]))
    if identity == "row recursion":
        r, kv = params["r"], params["k"]
        return check(identity, params, lambda: F_brute_general(r, n, c, p, kv),
                     lambda: G_recursion(r, n, c, S_function(n, p), kv))
    raise ValueError(f"unknown identity {identity!r}")


def _recursion_denominator(n: int, c: int, p: int):
    """Denominator actually divided by when L is computed recursively."""
    if n == 1:
        return cf.ONE
    ka, kb = cf._recursion_points(n, c, p)
    return cf.U_at(n, c, ka) * cf.W_at(n, c, kb) - cf.U_at(n, c, kb) * cf.W_at(n, c, ka)


def _run_chunk(args) -> list[Instance]:
    tasks, fast_filter = args
    return [run_task(t, fast_filter) for t in tasks]


def suite_tasks(suite: str, max_n: int, max_c: int) -> list[Task]:
    names = SUITES if suite == "all" else (suite,)
    out: list[Task] = []
    for name in names:
        if name not in _GENERATORS:
            raise ValueError(f"unknown suite {name!r}")
        out.extend(_GENERATORS[name](max_n, max_c))
    return out


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("PLANEPART_JOBS", "1")))
    except ValueError:
        return 1


def run_suite(
    suite: str,
    max_n: int = 3,
    max_c: int = 4,
    jobs: int | None = None,
    fast_filter: bool | None = None,
) -> VerificationReport:
    if max_n < 1:
        raise ValueError("max_n must be at least 1")
    if max_c < 0:
        raise ValueError("max_c must be non-negative")
    jobs = default_jobs() if jobs is None else max(1, jobs)
    names = SUITES if suite == "all" else (suite,)
    report = VerificationReport(suite, {"max_n": max_n, "max_c": max_c})
    for name in names:
        ff = (name in FAST_FILTER_DEFAULT) if fast_filter is None else fast_filter
        tasks = suite_tasks(name, max_n, max_c)
        if jobs == 1 or len(tasks) < 2:
            report.extend([run_task(t, ff) for t in tasks])
            continue
        size = max(1, len(tasks) // (jobs * 4))
        chunks = [(tasks[i:i + size], ff) for i in range(0, len(tasks), size)]
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            for part in ex.map(_run_chunk, chunks):
                report.extend(part)
    return report
