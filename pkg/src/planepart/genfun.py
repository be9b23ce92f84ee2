"""Brute-force generating functions and the pointwise row recursion.

``F_brute`` and ``F_brute_general`` sum sign * q**norm over patterns directly
(through the counting kernel).  ``G_recursion`` evaluates the iterated
row-by-row sums with the extended summation convention and never touches a
pattern.  The two are independent computation paths for the same values.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from math import comb
from typing import Callable, Sequence

from .exactq import ONE, ZERO, RationalFunction, poly
from .kernel import count_completions
from .patterns import gt_branches, row_inversions, spp_enumerate


def e_indicator(i: int, t: int, x: int) -> int:
    return 1 if (x - i) % t == 0 else 0


def S_np(n: int, p: int, kvec: Sequence[int]) -> int:
    if len(kvec) != n:
        raise ValueError("kvec must have length n")
    return 1 if sum(k & 1 for k in kvec) == p else 0


def T_ni(n: int, i: int, kvec: Sequence[int]) -> int:
    if len(kvec) != n:
        raise ValueError("kvec must have length n")
    return sum((-1) ** sum(sub) for sub in combinations(kvec, i))


def check_linearcombination(n: int, p: int, kvec: Sequence[int]) -> bool:
    """Whether S(n,p) equals its expansion in T(n,0), ..., T(n,n) at kvec."""
    total = 0
    for i in range(n + 1):
        coef = sum(
            (-1) ** l * comb(i, l) * comb(n - i, p - l)
            for l in range(max(0, i - n + p), min(p, i) + 1)
        )
        total += coef * T_ni(n, i, kvec)
    # 2**n * S == total, kept in integers
    return total == (S_np(n, p, kvec) << n)


@dataclass(frozen=True)
class TopRowFunction:
    arity: int
    evaluator: Callable[[tuple[int, ...]], RationalFunction]
    key: object = None  # hashable identity for memo tables

    def __call__(self, kvec: Sequence[int]) -> RationalFunction:
        kvec = tuple(kvec)
        if len(kvec) != self.arity:
            raise ValueError(f"expected {self.arity} arguments")
        return self.evaluator(kvec)


def S_function(n: int, p: int) -> TopRowFunction:
    return TopRowFunction(n, lambda kv: ONE if S_np(n, p, kv) else ZERO, ("S", n, p))


# ---------------------------------------------------------------------------
# direct summation


def _counts_to_rf(counts: dict, p: int, sign: int = 1) -> RationalFunction:
    terms = {norm: sign * v for (odd, norm), v in counts.items() if odd == p}
    if not terms:
        return ZERO
    lo = min(terms)
    hi = max(terms)
    return poly([terms.get(e, 0) for e in range(lo, hi + 1)], lo)


def _top_sign(r: int, c: int, top: Sequence[int]) -> int:
    if r == 0:
        return 1
    return -1 if row_inversions((0, *top, c)) & 1 else 1


def _branch_job(args):
    branch, r, n, c = args
    counts = count_completions(list(branch), r - 1, n, c)
    shift = sum(branch)
    flip = r >= 2 and row_inversions((0, *branch, c)) & 1
    out = {}
    for (odd, norm), v in counts.items():
        out[(odd, norm + shift)] = -v if flip else v
    return out


def signed_counts(r: int, n: int, c: int, top: Sequence[int], jobs: int = 1) -> dict:
    """Signed counts by (odd entries of row 1, norm below the top row)."""
    top = tuple(int(x) for x in top)
    if jobs <= 1 or r == 0:
        return count_completions(list(top), r, n, c)
    branches = [(b, r, n, c) for b in gt_branches((0, *top, c))]
    total: dict = {}
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        for part in ex.map(_branch_job, branches, chunksize=max(1, len(branches) // (4 * jobs))):
            for key, v in part.items():
                total[key] = total.get(key, 0) + v
    return {k: v for k, v in total.items() if v}


@lru_cache(maxsize=None)
def _F_all_p(n: int, c: int, k: int) -> tuple:
    counts = count_completions([k], n - 1, n, c)
    sign = _top_sign(n - 1, c, (k,))
    return tuple(_counts_to_rf(counts, p, sign) for p in range(n + 1))


def F_brute(n: int, c: int, p: int, k: int) -> RationalFunction:
    """Signed norm generating function of (n-1, n, c)-patterns with top entry k, over q**k."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if not (0 <= p <= n):
        return ZERO
    return _F_all_p(n, c, k)[p]


def F_brute_general(r: int, n: int, c: int, p: int, kvec: Sequence[int], jobs: int = 1) -> RationalFunction:
    if not (0 <= r <= n):
        raise ValueError("need 0 <= r <= n")
    kvec = tuple(int(x) for x in kvec)
    if len(kvec) != n - r:
        raise ValueError(f"kvec must have length {n - r}")
    if not (0 <= p <= n):
        return ZERO
    counts = signed_counts(r, n, c, kvec, jobs)
    return _counts_to_rf(counts, p, _top_sign(r, c, kvec))


class OracleMismatch(AssertionError):
    pass


@lru_cache(maxsize=None)
def _G_spp_all(n: int, c: int) -> tuple:
    coeffs = [dict() for _ in range(n + 1)]
    for spp in spp_enumerate(n, c):
        d = coeffs[spp.odd_rows]
        d[spp.norm] = d.get(spp.norm, 0) + 1
    out = []
    for d in coeffs:
        out.append(poly([d.get(e, 0) for e in range(max(d) + 1)]) if d else ZERO)
    return tuple(out)


@lru_cache(maxsize=None)
def G_brute(n: int, c: int, p: int) -> RationalFunction:
    """Generating function of SPPs with parts <= n, at most c columns, p odd-length rows."""
    if n < 1 or c < 0:
        raise ValueError("need n >= 1 and c >= 0")
    if not (0 <= p <= n):
        return ZERO
    via_patterns = ZERO
    for k in range(c + 1):
        via_patterns = via_patterns + F_brute(n, c, p, k).mul_q(k)
    via_spp = _G_spp_all(n, c)[p]
    if via_patterns != via_spp:
        raise OracleMismatch(f"G({n},{c},{p}): pattern sum and SPP enumeration differ")
    return via_spp


# ---------------------------------------------------------------------------
# the row recursion


def ext_indices(a: int, b: int) -> tuple[int, range]:
    """Sign and index set of sum_{x=a}^{b} under the extended convention."""
    if b >= a:
        return 1, range(a, b + 1)
    return -1, range(b + 1, a)


def G_recursion(r: int, n: int, c: int, A: TopRowFunction, kvec: Sequence[int]) -> RationalFunction:
    """Iterated sums over rows, each range taken with the extended convention."""
    if not (0 <= r <= n):
        raise ValueError("need 0 <= r <= n")
    kvec = tuple(int(x) for x in kvec)
    if len(kvec) != n - r:
        raise ValueError(f"kvec must have length {n - r}")
    if A.arity != n:
        raise ValueError("A must take n arguments")
    memo: dict = {}

    def G(level: int, ks: tuple) -> RationalFunction:
        key = (level, ks)
        hit = memo.get(key)
        if hit is not None:
            return hit
        if level == 0:
            val = A(ks)
        else:
            bounds = (0,) + ks + (c,)
            sign = 1
            ranges = []
            for a, b in zip(bounds, bounds[1:]):
                s, rng = ext_indices(a, b)
                sign *= s
                ranges.append(rng)
            val = ZERO
            for ls in product(*ranges):
                inner = G(level - 1, ls)
                if inner:
                    val = val + inner.mul_q(sum(ls))
            if sign < 0:
                val = -val
        memo[key] = val
        return val

    return G(r, kvec)


def G_value(n: int, c: int, p: int) -> RationalFunction:
    """Refined count with the boundary conventions used by the recursions.

    n = 0 gives 1 for p = 0 and 0 otherwise, for every c; otherwise a
    negative c gives 0.
    """
    if n == 0:
        return ONE if p == 0 else ZERO
    if c < 0:
        return ZERO
    return G_brute(n, c, p)


__all__ = [
    "e_indicator",
    "S_np",
    "T_ni",
    "check_linearcombination",
    "TopRowFunction",
    "S_function",
    "F_brute",
    "F_brute_general",
    "G_brute",
    "G_recursion",
    "G_value",
    "signed_counts",
    "OracleMismatch",
]
