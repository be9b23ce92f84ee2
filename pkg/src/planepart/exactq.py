"""Exact arithmetic in Q, Q[q, 1/q] and Q(q).

Values are immutable.  A :class:`LaurentPolynomial` is stored offset-dense as
``q**lo * (N[0] + N[1] q + ...) / s`` with integer coefficients ``N`` and a
positive integer ``s``; ``N[0]`` and ``N[-1]`` are nonzero and
``gcd(content(N), s) == 1``.  A :class:`RationalFunction` adds a denominator
``D``: a primitive integer polynomial with positive leading coefficient and
nonzero constant term, coprime to ``N``.  That normal form is unique, so
equality and hashing are structural.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from functools import lru_cache
from math import gcd as igcd
from typing import Iterable, Mapping, Union

from . import _dense as dp

Rational = Fraction

Scalar = Union[int, Fraction]


def _norm_lp(lo, N, s):
    """Normalize raw (lo, N, s); N may carry zeros at either end."""
    i = 0
    n = len(N)
    while i < n and not N[i]:
        i += 1
    if i == n:
        return 0, (), 1
    j = n
    while not N[j - 1]:
        j -= 1
    if i or j != n:
        N = N[i:j]
        lo += i
    if s < 0:
        s = -s
        N = [-x for x in N]
    if s != 1:
        g = igcd(dp.content(N), s)
        if g != 1:
            N = [x // g for x in N]
            s //= g
    return lo, tuple(N), s


def _align_add(lo1, N1, s1, lo2, N2, s2, sign=1):
    if not N2:
        return lo1, list(N1), s1
    if not N1:
        return lo2, [sign * x for x in N2], s2
    if s1 == s2:
        m1 = m2 = 1
        s = s1
    else:
        g = igcd(s1, s2)
        m1 = s2 // g
        m2 = s1 // g
        s = s1 * m1
    lo = min(lo1, lo2)
    hi = max(lo1 + len(N1), lo2 + len(N2))
    out = [0] * (hi - lo)
    o1 = lo1 - lo
    for i, x in enumerate(N1):
        out[o1 + i] = x * m1
    o2 = lo2 - lo
    m2 *= sign
    for i, x in enumerate(N2):
        out[o2 + i] += x * m2
    return lo, out, s


def _coerce_scalar(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"not an exact scalar: {c!r}")


class LaurentPolynomial:
    """Finite sum of rational multiples of integer powers of q."""

    __slots__ = ("lo", "N", "s", "_hash")

    def __init__(self, terms: Mapping[int, Scalar] | None = None):
        if not terms:
            self.lo, self.N, self.s = 0, (), 1
        else:
            coeffs = {int(e): _coerce_scalar(c) for e, c in terms.items()}
            lo = min(coeffs)
            hi = max(coeffs)
            s = 1
            for c in coeffs.values():
                s = s * c.denominator // igcd(s, c.denominator)
            N = [0] * (hi - lo + 1)
            for e, c in coeffs.items():
                N[e - lo] += c.numerator * (s // c.denominator)
            self.lo, self.N, self.s = _norm_lp(lo, N, s)
        self._hash = None

    @classmethod
    def _raw(cls, lo, N, s):
        obj = object.__new__(cls)
        obj.lo, obj.N, obj.s = _norm_lp(lo, N, s)
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, e: int, c: Scalar = 1) -> "LaurentPolynomial":
        c = _coerce_scalar(c)
        return cls._raw(e, [c.numerator], c.denominator)

    @classmethod
    def constant(cls, c: Scalar) -> "LaurentPolynomial":
        return cls.monomial(0, c)

    @property
    def terms(self) -> dict[int, Fraction]:
        return {self.lo + i: Fraction(x, self.s) for i, x in enumerate(self.N) if x}

    def is_zero(self) -> bool:
        return not self.N

    @property
    def low_degree(self) -> int:
        return self.lo

    @property
    def degree(self) -> int:
        if not self.N:
            raise ValueError("degree of zero")
        return self.lo + len(self.N) - 1

    def coefficient(self, e: int) -> Fraction:
        i = e - self.lo
        if 0 <= i < len(self.N):
            return Fraction(self.N[i], self.s)
        return Fraction(0)

    def _wrap(self, other):
        if isinstance(other, LaurentPolynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPolynomial.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._wrap(other)
        if other is NotImplemented:
            return NotImplemented
        return LaurentPolynomial._raw(*_align_add(self.lo, self.N, self.s, other.lo, other.N, other.s))

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial._raw(self.lo, [-x for x in self.N], self.s)

    def __sub__(self, other):
        other = self._wrap(other)
        if other is NotImplemented:
            return NotImplemented
        return LaurentPolynomial._raw(*_align_add(self.lo, self.N, self.s, other.lo, other.N, other.s, -1))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._wrap(other)
        if other is NotImplemented:
            return NotImplemented
        return LaurentPolynomial._raw(self.lo + other.lo, dp.mul(list(self.N), list(other.N)), self.s * other.s)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            if len(self.N) != 1:
                raise ValueError("negative power of a non-monomial")
            c = Fraction(self.s, self.N[0]) ** (-e)
            return LaurentPolynomial.monomial(self.lo * e, c)
        return LaurentPolynomial._raw(self.lo * e, dp.power(list(self.N), e), self.s**e)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPolynomial.constant(other)
        if isinstance(other, RationalFunction):
            return RationalFunction(self) == other
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.lo == other.lo and self.s == other.s and self.N == other.N

    def __hash__(self):
        if self._hash is None:
            if len(self.N) <= 1 and self.lo == 0:
                self._hash = hash(Fraction(self.N[0], self.s) if self.N else 0)
            else:
                self._hash = hash(("RF", self.lo, self.N, self.s, (1,)))
        return self._hash

    def __call__(self, v: Scalar) -> Fraction:
        return eval_q_at(RationalFunction(self), v)

    def to_text(self) -> str:
        return _terms_text(self.terms)

    def to_pretty(self) -> str:
        return _terms_pretty(self.terms)

    def __str__(self):
        return self.to_pretty()

    def __repr__(self):
        return f"LaurentPolynomial({self.to_text()!r})"


class RationalFunction:
    """Element of Q(q) in the unique normal form described in the module doc."""

    __slots__ = ("lo", "N", "s", "D", "_hash")

    def __init__(self, num=0, den=None):
        num = _as_rf(num)
        if den is None:
            self.lo, self.N, self.s, self.D = num.lo, num.N, num.s, num.D
        else:
            r = num / _as_rf(den)
            self.lo, self.N, self.s, self.D = r.lo, r.N, r.s, r.D
        self._hash = None

    @classmethod
    def _make(cls, lo, N, s, D):
        obj = object.__new__(cls)
        obj.lo, obj.N, obj.s, obj.D = lo, N, s, D
        obj._hash = None
        return obj

    @classmethod
    def _build(cls, lo, N, s, D, reduce=True):
        """Normalize arbitrary raw parts (D nonzero integer polynomial)."""
        D = dp.trim(list(D))
        if not D:
            raise ZeroDivisionError("zero divisor")
        k = 0
        while not D[k]:
            k += 1
        if k:
            D = D[k:]
            lo -= k
        cont, D = dp.primitive(D)
        s = s * cont
        lo, N, s = _norm_lp(lo, N, s)
        if not N:
            return ZERO
        if reduce and len(D) > 1:
            g = dp.gcd(list(N), D)
            if len(g) > 1:
                N = dp.divexact(list(N), g)
                D = dp.divexact(D, g)
                lo, N, s = _norm_lp(lo, N, s)
        return cls._make(lo, N, s, tuple(D))

    @classmethod
    def from_laurent(cls, p: LaurentPolynomial) -> "RationalFunction":
        if not p.N:
            return ZERO
        return cls._make(p.lo, p.N, p.s, (1,))

    @classmethod
    def q_power(cls, e: int, c: Scalar = 1) -> "RationalFunction":
        c = _coerce_scalar(c)
        if not c:
            return ZERO
        return cls._make(e, (c.numerator,), c.denominator, (1,))

    # -- views ---------------------------------------------------------------
    @property
    def numerator(self) -> LaurentPolynomial:
        return LaurentPolynomial._raw(self.lo, list(self.N), self.s)

    @property
    def denominator(self) -> LaurentPolynomial:
        return LaurentPolynomial._raw(0, list(self.D), 1)

    def is_zero(self) -> bool:
        return not self.N

    def is_laurent(self) -> bool:
        return self.D == (1,)

    def to_laurent(self) -> LaurentPolynomial:
        if not self.is_laurent():
            raise ValueError("not a Laurent polynomial")
        return self.numerator

    def is_constant(self) -> bool:
        return not self.N or (self.D == (1,) and len(self.N) == 1 and self.lo == 0)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("not a constant")
        return Fraction(self.N[0], self.s) if self.N else Fraction(0)

    # -- arithmetic ----------------------------------------------------------
    def __add__(self, other):
        return _add(self, other, 1)

    def __radd__(self, other):
        return _add(self, other, 1)

    def __sub__(self, other):
        return _add(self, other, -1)

    def __rsub__(self, other):
        return _add(-self, other, 1)

    def __neg__(self):
        if not self.N:
            return self
        return RationalFunction._make(self.lo, tuple(-x for x in self.N), self.s, self.D)

    def __mul__(self, other):
        other = _as_rf_or_none(other)
        if other is None:
            return NotImplemented
        return _mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_rf_or_none(other)
        if other is None:
            return NotImplemented
        return _mul(self, other.inverse())

    def __rtruediv__(self, other):
        other = _as_rf_or_none(other)
        if other is None:
            return NotImplemented
        return _mul(other, self.inverse())

    def mul_q(self, e: int) -> "RationalFunction":
        """Multiply by q**e."""
        if not self.N or not e:
            return self
        return RationalFunction._make(self.lo + e, self.N, self.s, self.D)

    def inverse(self) -> "RationalFunction":
        if not self.N:
            raise ZeroDivisionError("zero divisor")
        cont, P = dp.primitive(list(self.N))
        num = [x * self.s for x in self.D]
        lo, num, s = _norm_lp(-self.lo, num, cont)
        return RationalFunction._make(lo, num, s, tuple(P))

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        if e == 0:
            return ONE
        if e == 1:
            return self
        N = dp.power(list(self.N), e)
        D = dp.power(list(self.D), e) if len(self.D) > 1 else [1]
        return RationalFunction._make(self.lo * e, tuple(N), self.s**e, tuple(D))

    def __eq__(self, other):
        other = _as_rf_or_none(other)
        if other is None:
            return NotImplemented
        return (
            self.lo == other.lo
            and self.s == other.s
            and self.N == other.N
            and self.D == other.D
        )

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.constant_value())
            else:
                self._hash = hash(("RF", self.lo, self.N, self.s, self.D))
        return self._hash

    def __bool__(self):
        return bool(self.N)

    def __call__(self, v: Scalar) -> Fraction:
        return eval_q_at(self, v)

    # -- text ----------------------------------------------------------------
    def to_text(self) -> str:
        return f"( {self.numerator.to_text()} ) / ( {self.denominator.to_text()} )"

    def to_pretty(self) -> str:
        if self.is_laurent():
            return self.numerator.to_pretty()
        return f"({self.numerator.to_pretty()}) / ({self.denominator.to_pretty()})"

    def to_json_obj(self) -> dict:
        return {"num": _terms_json(self.numerator.terms), "den": _terms_json(self.denominator.terms)}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    def __str__(self):
        return self.to_pretty()

    def __repr__(self):
        return f"RationalFunction({self.to_text()!r})"


ZERO = RationalFunction._make(0, (), 1, (1,))
ONE = RationalFunction._make(0, (1,), 1, (1,))
Q = RationalFunction._make(1, (1,), 1, (1,))


def _as_rf_or_none(x):
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, int):
        return RationalFunction._make(0, (x,), 1, (1,)) if x else ZERO
    if isinstance(x, Fraction):
        return RationalFunction._make(0, (x.numerator,), x.denominator, (1,)) if x else ZERO
    if isinstance(x, LaurentPolynomial):
        return RationalFunction.from_laurent(x)
    return None


def _as_rf(x) -> RationalFunction:
    r = _as_rf_or_none(x)
    if r is None:
        raise TypeError(f"cannot convert {type(x).__name__} to RationalFunction")
    return r


def _add(a: RationalFunction, b, sign):
    b = _as_rf_or_none(b)
    if b is None:
        return NotImplemented
    if not b.N:
        return a
    if not a.N:
        return b if sign == 1 else -b
    if a.D == b.D:
        lo, N, s = _align_add(a.lo, a.N, a.s, b.lo, b.N, b.s, sign)
        if a.D == (1,):
            lo, N, s = _norm_lp(lo, N, s)
            if not N:
                return ZERO
            return RationalFunction._make(lo, N, s, (1,))
        return RationalFunction._build(lo, N, s, list(a.D))
    # Henrici: share g = gcd(Da, Db), then cancel only against g
    Da, Db = list(a.D), list(b.D)
    g = dp.gcd(Da, Db) if len(Da) > 1 and len(Db) > 1 else [1]
    if len(g) > 1:
        da = dp.divexact(Da, g)
        db = dp.divexact(Db, g)
    else:
        da, db = Da, Db
    t1 = dp.mul(list(a.N), db)
    t2 = dp.mul(list(b.N), da)
    lo, N, s = _align_add(a.lo, t1, a.s, b.lo, t2, b.s, sign)
    lo, N, s = _norm_lp(lo, N, s)
    if not N:
        return ZERO
    N = list(N)
    if len(g) > 1:
        h = dp.gcd(N, g)
        if len(h) > 1:
            N = dp.divexact(N, h)
            g = dp.divexact(g, h)
            lo, N, s = _norm_lp(lo, N, s)
            N = list(N)
    D = dp.mul(dp.mul(da, db), g)
    return RationalFunction._make(lo, tuple(N), s, tuple(D))


def _mul(a: RationalFunction, b: RationalFunction) -> RationalFunction:
    if not a.N or not b.N:
        return ZERO
    Na, Nb = list(a.N), list(b.N)
    Da, Db = list(a.D), list(b.D)
    if len(Db) > 1 and len(Na) > 1:
        g = dp.gcd(Na, Db)
        if len(g) > 1:
            Na = dp.divexact(Na, g)
            Db = dp.divexact(Db, g)
    if len(Da) > 1 and len(Nb) > 1:
        g = dp.gcd(Nb, Da)
        if len(g) > 1:
            Nb = dp.divexact(Nb, g)
            Da = dp.divexact(Da, g)
    lo, N, s = _norm_lp(a.lo + b.lo, dp.mul(Na, Nb), a.s * b.s)
    # Gauss: the quotients stay primitive with positive leading coefficient
    D = dp.mul(Da, Db) if len(Da) > 1 or len(Db) > 1 else [Da[0] * Db[0]]
    return RationalFunction._make(lo, N, s, tuple(D))


def rf(x) -> RationalFunction:
    """Coerce an int, Fraction, LaurentPolynomial or text form to RationalFunction."""
    if isinstance(x, str):
        return parse_rf(x)
    return _as_rf(x)


def q_power(e: int, c: Scalar = 1) -> RationalFunction:
    return RationalFunction.q_power(e, c)


def poly(coeffs: Iterable[Scalar], lo: int = 0) -> RationalFunction:
    """Laurent polynomial with the given ascending coefficients starting at q**lo."""
    return RationalFunction(LaurentPolynomial({lo + i: c for i, c in enumerate(coeffs) if c}))


# ---------------------------------------------------------------------------
# q-analogues


@lru_cache(maxsize=4096)
def qbracket(m: int, t: int = 1) -> RationalFunction:
    """(1 - q**m) / (1 - q**t)."""
    if t < 1:
        raise ValueError("base exponent must be positive")
    if m == 0:
        return ZERO
    if m % t == 0:
        j = m // t
        if j > 0:
            N = [0] * (m - t + 1)
            for i in range(0, m, t):
                N[i] = 1
            return RationalFunction._make(0, tuple(N), 1, (1,))
        N = [0] * (-m - t + 1)
        for i in range(0, -m, t):
            N[i] = -1
        return RationalFunction._make(m, tuple(N), 1, (1,))
    num = [0] * (abs(m) + 1)
    num[0] = 1
    num[abs(m)] = -1
    lo = 0
    if m < 0:
        # 1 - q**m = q**m (q**|m| - 1)
        num = [-x for x in num]
        lo = m
    den = [1] + [0] * (t - 1) + [-1]
    return RationalFunction._build(lo, num, 1, den)


def qfac(a: int, n: int, t: int = 1) -> RationalFunction:
    """Product of the n brackets [a;q^t], [a+t;q^t], ..., with m pre-multiplied by t.

    Negative n follows the extended convention [a]_n = 1 / [a+n]_{-n}.
    """
    return QProduct.fac(a, n, t).value()


@lru_cache(maxsize=4096)
def _qbinom_coeffs(n: int, k: int) -> tuple:
    if k == 0 or k == n:
        return (1,)
    a = _qbinom_coeffs(n - 1, k - 1)
    b = _qbinom_coeffs(n - 1, k)
    out = [0] * (k * (n - k) + 1)
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[i + k] += x
    return tuple(out)


def qbinom(n: int, k: int) -> RationalFunction:
    """Gaussian binomial; zero unless 0 <= k <= n."""
    if not (0 <= k <= n):
        return ZERO
    return RationalFunction._make(0, _qbinom_coeffs(n, k), 1, (1,))


class QProduct:
    """A product of q-brackets that tracks vanishing factors formally.

    ``QProduct(value, zeros)`` stands for ``value * 0**zeros``.  Multiplying and
    dividing adds and subtracts ``zeros`` so a ratio such as ``[c]/[c]_n`` at
    ``c = 0`` cancels the common vanishing bracket like the limit in ``q**c``.
    """

    __slots__ = ("_value", "zeros")

    def __init__(self, value=1, zeros: int = 0):
        self._value = _as_rf(value)
        self.zeros = zeros

    @classmethod
    def bracket(cls, m: int, t: int = 1) -> "QProduct":
        if m == 0:
            return cls(ONE, 1)
        return cls(qbracket(m, t), 0)

    @classmethod
    def fac(cls, a: int, n: int, t: int = 1) -> "QProduct":
        out = cls(ONE, 0)
        if n >= 0:
            for i in range(n):
                out = out * cls.bracket(a + i * t, t)
        else:
            for i in range(1, -n + 1):
                out = out / cls.bracket(a - i * t, t)
        return out

    def __mul__(self, other):
        if not isinstance(other, QProduct):
            other = QProduct(other)
        return QProduct(self._value * other._value, self.zeros + other.zeros)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, QProduct):
            other = QProduct(other)
        return QProduct(self._value / other._value, self.zeros - other.zeros)

    def __rtruediv__(self, other):
        return QProduct(other) / self

    def __pow__(self, e: int):
        return QProduct(self._value**e, self.zeros * e)

    def value(self) -> RationalFunction:
        if self.zeros > 0:
            return ZERO
        if self.zeros < 0:
            raise ZeroDivisionError("zero divisor")
        return self._value


# ---------------------------------------------------------------------------
# evaluation


def eval_q_at(f, v: Scalar) -> Fraction:
    """Substitute q := v exactly; raises ValueError("pole") at a pole."""
    f = _as_rf(f)
    v = _coerce_scalar(v)
    if not f.N:
        return Fraction(0)
    den_n, den_d = dp.evaluate(list(f.D), v.numerator, v.denominator)
    if den_n == 0:
        raise ValueError("pole")
    if v == 0 and f.lo < 0:
        raise ValueError("pole")
    num_n, num_d = dp.evaluate(list(f.N), v.numerator, v.denominator)
    val = Fraction(num_n * den_d, num_d * den_n * f.s)
    if f.lo:
        val *= v**f.lo
    return val


# ---------------------------------------------------------------------------
# text and JSON forms


def _coef_text(c: Fraction) -> str:
    return str(c)


def _terms_text(terms: Mapping[int, Fraction]) -> str:
    if not terms:
        return "0"
    parts = []
    for e in sorted(terms):
        c = terms[e]
        parts.append(_coef_text(c) if e == 0 else f"{_coef_text(c)}*q^{e}")
    return " + ".join(parts)


def _terms_pretty(terms: Mapping[int, Fraction]) -> str:
    if not terms:
        return "0"
    out = []
    for idx, e in enumerate(sorted(terms)):
        c = terms[e]
        neg = c < 0
        a = -c if neg else c
        if e == 0:
            body = str(a)
        else:
            mono = "q" if e == 1 else f"q^{e}"
            body = mono if a == 1 else f"{a}*{mono}"
        if idx == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


def _terms_json(terms: Mapping[int, Fraction]) -> list:
    return [[e, str(terms[e])] for e in sorted(terms)]


_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|(\^\s*\(?\s*[+-]?\s*\d+\s*\)?)|([+\-*q]))")


def parse_laurent(text: str) -> LaurentPolynomial:
    """Parse the canonical or pretty text of a Laurent polynomial."""
    text = text.strip()
    pos = 0
    toks = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial at {text[pos:]!r}")
        if m.group(1) is not None:
            toks.append(("num", Fraction(m.group(1))))
        elif m.group(2) is not None:
            toks.append(("exp", int(re.sub(r"[\s^()]", "", m.group(2)))))
        else:
            toks.append((m.group(3), None))
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    terms: dict[int, Fraction] = {}
    i = 0
    n = len(toks)
    first = True
    while i < n:
        sign = 1
        seen_sign = False
        while i < n and toks[i][0] in "+-":
            if toks[i][0] == "-":
                sign = -sign
            seen_sign = True
            i += 1
        if not first and not seen_sign:
            raise ValueError(f"missing operator in {text!r}")
        first = False
        coef = Fraction(1)
        got = False
        if i < n and toks[i][0] == "num":
            coef = toks[i][1]
            got = True
            i += 1
            if i < n and toks[i][0] == "*":
                i += 1
                if i >= n or toks[i][0] != "q":
                    raise ValueError(f"expected q in {text!r}")
        e = 0
        if i < n and toks[i][0] == "q":
            got = True
            e = 1
            i += 1
            if i < n and toks[i][0] == "exp":
                e = toks[i][1]
                i += 1
        if not got:
            raise ValueError(f"empty term in {text!r}")
        terms[e] = terms.get(e, Fraction(0)) + sign * coef
    return LaurentPolynomial({e: c for e, c in terms.items() if c})


def parse_rf(text: str) -> RationalFunction:
    """Parse either text form of a RationalFunction, or a bare polynomial."""
    t = text.strip()
    if t.startswith("{"):
        return rf_from_json(json.loads(t))
    m = re.fullmatch(r"\(\s*(.*?)\s*\)\s*/\s*\(\s*(.*?)\s*\)", t, re.S)
    if m:
        return RationalFunction(parse_laurent(m.group(1)), parse_laurent(m.group(2)))
    return RationalFunction(parse_laurent(t))


def rf_from_json(obj) -> RationalFunction:
    if isinstance(obj, str):
        obj = json.loads(obj)
    num = LaurentPolynomial({int(e): Fraction(c) for e, c in obj["num"]})
    den = LaurentPolynomial({int(e): Fraction(c) for e, c in obj.get("den", [[0, "1"]])})
    return RationalFunction(num, den)
