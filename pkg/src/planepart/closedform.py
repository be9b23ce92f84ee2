"""Closed forms for the refined generating function and its building blocks.

Every formula is assembled from ``qbracket``/``qfac``/``qbinom`` so that a
transcription slip shows up against the brute-force oracles.  Brackets in base
q**2 take the pre-multiplied exponent: [x; q^2] is ``qbracket(2*x, 2)``.

The canonical object is F with the 1/q**k normalization:
``quasi_eval(F_closed(n, c, p), k) * q**k`` is the generating function of
strict plane partitions with parts <= n, at most c columns, p odd-length rows
and k parts equal to n.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exactq import ONE, ZERO, QProduct, RationalFunction, qbinom, qbracket, qfac, q_power
from .genfun import OracleMismatch
from .qsymb import QPolynomialK, QQuasiPolynomialK, ext_range_sum, kfac
from .report import VerificationReport, check

HALF = ONE / 2


def C2(x: int) -> int:
    return x * (x - 1) // 2


def _sgn(e: int) -> int:
    return -1 if e & 1 else 1


def _ext_prod_1pq(lo: int, hi: int) -> RationalFunction:
    """prod_{i=lo}^{hi} (1 + q**i) with the extended convention for hi < lo."""
    out = ONE
    if hi >= lo - 1:
        for i in range(lo, hi + 1):
            out = out * (1 + q_power(i))
    else:
        for i in range(hi + 1, lo):
            out = out / (1 + q_power(i))
    return out


# ---------------------------------------------------------------------------
# U and W


@lru_cache(maxsize=None)
def W_poly(n: int, c: int) -> QPolynomialK:
    if n < 1:
        raise ValueError("n must be at least 1")
    return kfac(1, n - 1) * kfac(-c - n + 1, n - 1)


def _xy_denominator(n: int, c: int, i: int) -> RationalFunction:
    return qfac(1, i - 1) * qfac(1, n - 1 - i) * qfac(c + i + 1, n - 1)


@lru_cache(maxsize=None)
def X_poly(n: int, c: int) -> QPolynomialK:
    out = QPolynomialK()
    for i in range(1, n):
        scal = q_power(C2(i)) / _xy_denominator(n, c, i)
        out = out + kfac(1, n - 1) * kfac(-c - i + 1, i - 1) * kfac(-c - n + 1, n - i - 1) * scal
    return out


@lru_cache(maxsize=None)
def Y_poly(n: int, c: int) -> QPolynomialK:
    out = QPolynomialK()
    for i in range(1, n):
        scal = q_power(C2(i)) / _xy_denominator(n, c, i)
        out = out + kfac(1, i - 1) * kfac(i + 1, n - i - 1) * kfac(-c - n + 1, n - 1) * scal
    return out


def _u_exponent(n: int, c: int) -> int:
    e = (n - 1) * (2 * c + n)
    assert e % 2 == 0, "half-integral exponent"
    return e // 2


@lru_cache(maxsize=None)
def U_quasi(n: int, c: int) -> QQuasiPolynomialK:
    pre = q_power(_u_exponent(n, c), _sgn(n))
    plain = (X_poly(n, c) * _sgn(c) - Y_poly(n, c)) * pre
    return QQuasiPolynomialK(plain, QPolynomialK.monomial(n - 1))


def U_at(n: int, c: int, k: int) -> RationalFunction:
    return U_quasi(n, c).eval(k)


def W_at(n: int, c: int, k: int) -> RationalFunction:
    return W_poly(n, c).eval(k)


# ---------------------------------------------------------------------------
# L, M, G in closed form


def _term(qexp: int, binom: RationalFunction, rest) -> RationalFunction:
    if not binom:
        return ZERO
    value = rest.value() if isinstance(rest, QProduct) else rest
    return q_power(qexp) * binom * value


@lru_cache(maxsize=None)
def L_closed(n: int, c: int, p: int) -> RationalFunction:
    if n < 1:
        raise ValueError("n must be at least 1")
    if not (0 <= p <= n):
        return ZERO
    if n == 1:
        return ONE * Fraction(_sgn(p), 2)
    b0 = qbinom(n - 1, p)
    b1 = qbinom(n - 1, p - 1)
    if c % 2 == 0:
        pre = ONE
        for i in range(1, n):
            pre = pre * qfac(c + 2 * i + 1, n - i) / (qfac(2 * i, n - i) * qbracket(2 * i))
        pre = pre * qfac(c + 1, n - 1) * qfac(1, n - 1) * HALF
        t0 = _term(C2(p + 1), b0, QProduct.bracket(c) / QProduct.fac(c + p, n))
        t1 = _term(C2(p), b1, QProduct.bracket(c + 2 * n) / QProduct.fac(c + p + 1, n))
        return pre * (t0 - t1)
    pre = ONE
    for i in range(1, n):
        pre = pre * qfac(c + 2 * i, n - i) / (qfac(2 * i, n - i) * qbracket(2 * i))
    pre = pre * qfac(1, n - 1) * HALF
    return pre * (q_power(C2(p + 1)) * b0 - q_power(C2(p)) * b1)


@lru_cache(maxsize=None)
def M_closed(n: int, c: int, p: int) -> RationalFunction:
    if n < 1:
        raise ValueError("n must be at least 1")
    if not (0 <= p <= n):
        return ZERO
    if n == 1:
        return HALF
    pre = q_power(_u_exponent(n, c), _sgn(n - 1)) / qfac(1, n - 2)
    b0 = qbinom(n - 1, p)
    b1 = qbinom(n - 1, p - 1)
    if c % 2 == 0:
        prod = ONE
        for i in range(1, n):
            prod = prod * qfac(c + 2 * i, n - i) / qfac(2 * i, n - i)
        tail = qbracket(c + 2 * n - 1) / (qbracket(c + n) * qbracket(2 * n - 2))
        t0 = _term(C2(p + 1), b0, QProduct.bracket(c) / QProduct.fac(c + p, n)) * (ONE / qbracket(n - 1) - tail)
        t1 = _term(C2(p), b1, ONE / qfac(c + p + 1, n)) * (
            qfac(c + 2 * n - 1, 2) / (qbracket(c + n) * qbracket(2 * n - 2))
        )
        return pre * prod * (t0 + t1)
    prod = ONE
    for i in range(1, n):
        prod = prod * qfac(c + 2 * i + 1, n - i - 1) / qfac(2 * i, n - i)
    prod = prod / qbracket(2 * n - 2)
    return pre * prod * (q_power(C2(p + 1) + n - 1) * b0 + q_power(C2(p)) * b1)


@lru_cache(maxsize=None)
def G_closed(n: int, c: int, p: int) -> RationalFunction:
    """Refined Bender-Knuth count by number of odd-length rows.

    n = 0 gives 1 for p = 0 and 0 otherwise, for every c; otherwise a
    negative c gives 0.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return ONE if p == 0 else ZERO
    if c < 0 or not (0 <= p <= n):
        return ZERO
    lead = q_power(C2(p + 1)) * qbinom(n, p)
    if c % 2 == 0:
        prod = QProduct(ONE) / QProduct.fac(c + p, n + 1)
        for i in range(n + 1):
            prod = prod * QProduct.fac(c + 2 * i, n - i + 1) / QProduct.fac(2 + 2 * i, n - i)
        return lead * prod.value()
    prod = ONE
    for i in range(1, n + 1):
        prod = prod * qfac(c + 2 * i - 1, n - i + 1) / qfac(2 * i, n - i + 1)
    return lead * prod


@lru_cache(maxsize=None)
def F_closed(n: int, c: int, p: int) -> QQuasiPolynomialK:
    L = L_closed(n, c, p)
    M = M_closed(n, c, p)
    return U_quasi(n, c) * QQuasiPolynomialK(QPolynomialK.constant(L)) + QQuasiPolynomialK(W_poly(n, c) * M)


def F_closed_gf(n: int, c: int, p: int, k: int) -> RationalFunction:
    """Generating function with k parts equal to n: F(k) * q**k."""
    return F_closed(n, c, p).eval(k).mul_q(k)


@dataclass(frozen=True)
class ClosedFormBundle:
    n: int
    c: int
    p: int
    L: RationalFunction
    M: RationalFunction
    F: QQuasiPolynomialK
    G: RationalFunction

    @classmethod
    def build(cls, n: int, c: int, p: int) -> "ClosedFormBundle":
        return cls(n, c, p, L_closed(n, c, p), M_closed(n, c, p), F_closed(n, c, p), G_closed(n, c, p))


# ---------------------------------------------------------------------------
# special values of U


def _u_lead(n: int) -> RationalFunction:
    # prod_{i=1}^{n-2} (1 + q**i); equals 1/2 at n = 1
    return 2 * _ext_prod_1pq(1, n - 2)


def _floor_brackets(n: int) -> RationalFunction:
    return qbracket(2 * ((n - 1) // 2) + 1) * qbracket(2 * (n // 2))


def U_special(n: int, c: int, which: int | str) -> RationalFunction:
    """Closed product forms of U_{n,c}(k) at k = 0, -n, 1 and -n-1."""
    if n < 1:
        raise ValueError("n must be at least 1")
    key = _special_key(n, which)
    onepq = 1 + q_power(1)
    even = c % 2 == 0
    if key == "0":
        pre = _u_lead(n) / onepq ** (n - 1)
        if even:
            return pre * qfac(c + 1, n - 1) / qfac(c + 1, n - 1, 2)
        return pre * qfac(c, n) / (qfac(c, n, 2) * onepq)
    if key == "-n":
        e = (n - 1) * (3 * n - 2)
        assert e % 2 == 0, "half-integral exponent"
        # the extra sign (-1)**n is needed for the identity to hold
        pre = _sgn(n) * _u_lead(n) * onepq ** (n - 1) / q_power(e // 2)
        if even:
            return pre * qfac(c + 2, n - 1, 2) / qfac(c + 2, n - 1)
        return pre * qfac(c + 1, n, 2) * onepq / qfac(c + 1, n)
    if key == "1":
        pre = q_power(n) * _u_lead(n) / onepq ** (n - 1)
        if even:
            return pre * qfac(c, n - 1) * qbracket(n - 2) / qfac(c + 1, n - 1, 2)
        first = qfac(c - 1, n - 1) * qbracket(n - 2) / qfac(c, n - 1, 2)
        fb = _floor_brackets(n)
        # fb vanishes at n = 1, where [c;q]_{-1} may have a pole
        second = q_power(c + n - 3) * qfac(c, n - 2) * fb / qfac(c + 2, n - 1, 2) if fb else ZERO
        return pre * (first - second)
    # key == "-n-1"
    e = (n + 1) * (3 * n - 4)
    assert e % 2 == 0, "half-integral exponent"
    pre = _sgn(n) * _u_lead(n) * onepq ** (n - 1) / q_power(e // 2)
    if even:
        return pre * qfac(c + 4, n - 1, 2) * qbracket(n - 2) / qfac(c + 3, n - 1)
    first = qfac(c + 3, n - 1, 2) * qbracket(n - 2) / qfac(c + 2, n - 1)
    second = q_power(c + n) * qfac(c + 3, n - 1, 2) * _floor_brackets(n) / qfac(c + 2, n)
    return pre * (first + second)


def _special_key(n: int, which) -> str:
    if isinstance(which, str):
        key = which.replace(" ", "")
        if key in ("0", "1", "-n", "-n-1"):
            return key
        which = int(which)
    table = {0: "0", 1: "1", -n: "-n", -n - 1: "-n-1"}
    if which not in table:
        raise ValueError(f"no closed form for U at k={which}")
    return table[which]


_SPECIAL_K = {"0": lambda n: 0, "1": lambda n: 1, "-n": lambda n: -n, "-n-1": lambda n: -n - 1}


def special_k(n: int, which) -> int:
    return _SPECIAL_K[_special_key(n, which)](n)


# ---------------------------------------------------------------------------
# sums over k


def sum_W_closed(n: int, c: int) -> RationalFunction:
    e = (-n + 1) * (2 * c + n)
    assert e % 2 == 0
    return q_power(e // 2, _sgn(n - 1)) * qfac(1, n - 1) ** 2 * qfac(c + 1, 2 * n - 1) / qfac(1, 2 * n - 1)


def sum_U_closed(n: int, c: int) -> RationalFunction:
    pre = 2 / (qfac(1, n - 1, 2) * (1 + q_power(n - 1)) * (1 + q_power(n)))
    if c % 2 == 0:
        return pre * qfac(c + 2, n - 1, 2) * (1 + q_power(c + n))
    return pre * qfac(c + 1, n, 2) * (1 - q_power(2))


def sum_W(n: int, c: int) -> RationalFunction:
    closed = sum_W_closed(n, c)
    direct = ext_range_sum(QQuasiPolynomialK(W_poly(n, c)), 0, c)
    if closed != direct:
        raise OracleMismatch(f"sum of W({n},{c}) over k differs from its closed form")
    return closed


def sum_U(n: int, c: int) -> RationalFunction:
    closed = sum_U_closed(n, c)
    direct = ext_range_sum(U_quasi(n, c), 0, c)
    if closed != direct:
        raise OracleMismatch(f"sum of U({n},{c}) over k differs from its closed form")
    return closed


# ---------------------------------------------------------------------------
# denominators of the L recursion


_DEN_POINTS = {"main": (0, "-n"), "p0": ("-n-1", 0), "pn": (1, "-n")}


def denominator_lhs(n: int, c: int, which: str) -> RationalFunction:
    a, b = _DEN_POINTS[which]
    ka, kb = special_k(n, a), special_k(n, b)
    return U_at(n, c, ka) * W_at(n, c, kb) - U_at(n, c, kb) * W_at(n, c, ka)


def denominator_closed(n: int, c: int, which: str) -> RationalFunction:
    onepq = 1 + q_power(1)
    base = 2 * qfac(2, n - 1, 2) * onepq ** (2 * n - 1)
    even = c % 2 == 0
    if which == "main":
        pre = base / q_power(c * (n - 1) + 2 * n * (n - 1))
        return pre * (qfac(c + 2, n - 1, 2) / onepq if even else qfac(c + 1, n, 2) / qbracket(c + n))
    if which == "p0":
        pre = -base * qbracket(n - 1) / q_power((n - 1) * c + 2 * (n - 1) * (n + 1))
        body = qfac(c + 2, n, 2) if even else qfac(c + 1, n + 1, 2) * onepq / qbracket(c + n + 1)
        # an extra 1/[c+n;q] is needed for the identity to hold
        return pre * body / qbracket(c + n)
    if which == "pn":
        pre = base * qbracket(n - 1) / (q_power((n - 1) * c + n * (2 * n - 3)) * qbracket(c + n))
        return pre * (qfac(c, n, 2) if even else qfac(c - 1, n + 1, 2) * onepq / qbracket(c + n - 1))
    raise ValueError(f"unknown denominator {which!r}")


def denominator_product(n: int, c: int, which: str) -> RationalFunction:
    closed = denominator_closed(n, c, which)
    if closed != denominator_lhs(n, c, which):
        raise OracleMismatch(f"denominator {which} at n={n}, c={c} differs from its product form")
    return closed


# ---------------------------------------------------------------------------
# the recursion in n


def _solve_L(n, c, ka, ga, kb, gb) -> RationalFunction:
    """L from L U(ka) + M W(ka) = ga and L U(kb) + M W(kb) = gb (Cramer)."""
    den = U_at(n, c, ka) * W_at(n, c, kb) - U_at(n, c, kb) * W_at(n, c, ka)
    if not den:
        raise ZeroDivisionError("vanishing denominator")
    return (ga * W_at(n, c, kb) - gb * W_at(n, c, ka)) / den


def _conditions(n: int, c: int, p: int) -> dict:
    """Known values F(k) at the special points, keyed by k."""
    out = {}
    if p != n:
        out[0] = G_closed(n - 1, c, p)
    if p != 0:
        out[-n] = q_power(-3 * n * (n - 1) // 2, _sgn(n - 1)) * G_closed(n - 1, c + 2, p - 1)
    if p == n:
        out[1] = q_power((n + 2) * (n - 1) // 2) * G_closed(n - 1, c - 1, 0)
    if p == 0:
        out[-n - 1] = q_power(-(n - 1) * (2 * n + 1), _sgn(n - 1)) * G_closed(n - 1, c + 3, n - 1)
    return out


def _recursion_points(n: int, c: int, p: int) -> tuple[int, int]:
    if p == 0:
        return -n - 1, 0
    if p == n:
        if not denominator_lhs(n, c, "pn"):
            # degenerate for c <= 1; F(k=0) = 0 = G_{n-1,c,n} supplies the second equation
            return 0, -n
        return 1, -n
    return 0, -n


@lru_cache(maxsize=None)
def L_recursive(n: int, c: int, p: int) -> RationalFunction:
    if n < 1:
        raise ValueError("n must be at least 1")
    if not (0 <= p <= n):
        return ZERO
    if n == 1:
        return ONE * Fraction(_sgn(p), 2)
    cond = _conditions(n, c, p)
    ka, kb = _recursion_points(n, c, p)
    if ka == 0 and 0 not in cond:
        cond[0] = G_closed(n - 1, c, p)
    return _solve_L(n, c, ka, cond[ka], kb, cond[kb])


@lru_cache(maxsize=None)
def M_recursive(n: int, c: int, p: int) -> RationalFunction:
    if n < 1:
        raise ValueError("n must be at least 1")
    if not (0 <= p <= n):
        return ZERO
    if n == 1:
        return HALF
    L = L_recursive(n, c, p)
    if p != n:
        return (G_closed(n - 1, c, p) - U_at(n, c, 0) * L) / W_at(n, c, 0)
    g = q_power(-3 * n * (n - 1) // 2, _sgn(n - 1)) * G_closed(n - 1, c + 2, p - 1)
    return (g - U_at(n, c, -n) * L) / W_at(n, c, -n)


# ---------------------------------------------------------------------------
# products and identities


def bk_product(n: int, c: int) -> RationalFunction:
    out = ONE
    for i in range(1, n + 1):
        out = out * qfac(c + i, i) / qfac(i, i)
    return out


def sum_over_p_M_rhs(n: int, c: int) -> QPolynomialK:
    prod = ONE / qfac(1, n - 1)
    for i in range(1, n):
        prod = prod * qfac(c + i + 1, i - 1) / qfac(i, i)
    return QPolynomialK.monomial(n, prod)


def sum_over_p_M_lhs(n: int, c: int) -> QPolynomialK:
    # q^{(n-1)(k-c) - C(n,2) + k} = q^{-(n-1)c - C(n,2)} Y^n
    scal = q_power(-(n - 1) * c - C2(n), _sgn(n - 1))
    total = ZERO
    for p in range(n + 1):
        total = total + M_closed(n, c, p)
    return QPolynomialK.monomial(n, scal * total)


def sum_over_p_checks(n: int, c: int) -> VerificationReport:
    params = {"n": n, "c": c}
    rep = VerificationReport("sum-over-p", params)
    rep.instances.append(check("sum_p L", params, lambda: sum((L_closed(n, c, p) for p in range(n + 1)), ZERO), lambda: ZERO))
    rep.instances.append(check("sum_p M", params, lambda: sum_over_p_M_lhs(n, c), lambda: sum_over_p_M_rhs(n, c)))
    return rep


def hypo_lhs(n: int, c: int) -> RationalFunction:
    total = ZERO
    for i in range(1, n + 1):
        total = total + q_power(C2(n - i + 1) + i, _sgn(i)) / (qfac(c + i, n) * qfac(1, i - 1) * qfac(1, n - i))
    return total


def hypo_rhs(n: int, c: int) -> RationalFunction:
    e = (n - 1) * c + (n + 1) * n // 2
    return -q_power(e) * qfac(1, 2 * n - 2) / (qfac(1, n - 1) ** 2 * qfac(c + 1, 2 * n - 1))


def hypo_companion_lhs(n: int, c: int) -> RationalFunction:
    total = ZERO
    for i in range(n):
        total = total + q_power(C2(n + i), _sgn(i)) / (qfac(c + i + 1, n) * qfac(1, i) * qfac(1, n - i - 1))
    return total


def hypo_companion_rhs(n: int, c: int, short: bool = False) -> RationalFunction:
    """Right side of the companion sum.

    ``short=True`` uses [c+1;q]_{2n-2} in place of [c+1;q]_{2n-1}; that variant
    agrees only at n = 1, c = 0 and is kept to show the difference.
    """
    length = 2 * n - 2 if short else 2 * n - 1
    return q_power(C2(n)) * qfac(1, 2 * n - 2) / (qfac(c + 1, length) * qfac(1, n - 1) ** 2)


def hypo_identities(n: int, c: int) -> VerificationReport:
    params = {"n": n, "c": c}
    rep = VerificationReport("hypo", params)
    rep.instances.append(check("hypo", params, lambda: hypo_lhs(n, c), lambda: hypo_rhs(n, c)))
    rep.instances.append(
        check("hypo companion", params, lambda: hypo_companion_lhs(n, c), lambda: hypo_companion_rhs(n, c))
    )
    return rep
