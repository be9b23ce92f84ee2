"""Polynomials and period-2 quasi-polynomials in Y = q**k over Q(q)."""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from .exactq import ONE, ZERO, RationalFunction, q_power, rf, rf_from_json


def _trim(cs):
    cs = list(cs)
    while cs and not cs[-1]:
        cs.pop()
    return tuple(cs)


class QPolynomialK:
    """sum_m c_m Y**m with RationalFunction coefficients, stored densely by degree."""

    __slots__ = ("cs",)

    def __init__(self, coeffs: Mapping[int, object] | Sequence[object] | None = None):
        if coeffs is None:
            self.cs = ()
        elif isinstance(coeffs, Mapping):
            if any(m < 0 for m in coeffs):
                raise ValueError("negative degree")
            top = max(coeffs, default=-1)
            cs = [ZERO] * (top + 1)
            for m, c in coeffs.items():
                cs[m] = cs[m] + rf(c)
            self.cs = _trim(cs)
        else:
            self.cs = _trim(rf(c) for c in coeffs)

    @classmethod
    def _raw(cls, cs):
        obj = object.__new__(cls)
        obj.cs = _trim(cs)
        return obj

    @classmethod
    def constant(cls, c) -> "QPolynomialK":
        return cls._raw([rf(c)])

    @classmethod
    def monomial(cls, m: int, c=1) -> "QPolynomialK":
        return cls._raw([ZERO] * m + [rf(c)])

    @property
    def coeffs(self) -> dict[int, RationalFunction]:
        return {m: c for m, c in enumerate(self.cs) if c}

    def coefficient(self, m: int) -> RationalFunction:
        return self.cs[m] if 0 <= m < len(self.cs) else ZERO

    @property
    def degree(self) -> int:
        """Top degree in Y; -1 for the zero polynomial."""
        return len(self.cs) - 1

    def is_zero(self) -> bool:
        return not self.cs

    def __call__(self, k: int) -> RationalFunction:
        return self.eval(k)

    def eval(self, k: int) -> RationalFunction:
        total = ZERO
        for m, c in enumerate(self.cs):
            if c:
                total = total + c.mul_q(m * k)
        return total

    def eval_y(self, y) -> RationalFunction:
        """Horner evaluation at an arbitrary value of Y."""
        y = rf(y)
        total = ZERO
        for c in reversed(self.cs):
            total = total * y + c
        return total

    def __add__(self, other):
        other = _as_qpk(other)
        if other is None:
            return NotImplemented
        n = max(len(self.cs), len(other.cs))
        return QPolynomialK._raw(self.coefficient(i) + other.coefficient(i) for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return QPolynomialK._raw(-c for c in self.cs)

    def __sub__(self, other):
        other = _as_qpk(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, QQuasiPolynomialK):
            return NotImplemented
        o = _as_qpk(other)
        if o is None:
            return NotImplemented
        if not self.cs or not o.cs:
            return QPolynomialK()
        out = [ZERO] * (len(self.cs) + len(o.cs) - 1)
        for i, a in enumerate(self.cs):
            if a:
                for j, b in enumerate(o.cs):
                    if b:
                        out[i + j] = out[i + j] + a * b
        return QPolynomialK._raw(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = QPolynomialK.constant(ONE)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        other = _as_qpk(other)
        if other is None:
            return NotImplemented
        return self.cs == other.cs

    def __hash__(self):
        return hash(self.cs)

    def to_json_obj(self) -> dict:
        return {str(m): c.to_json_obj() for m, c in enumerate(self.cs) if c}

    @classmethod
    def from_json_obj(cls, obj) -> "QPolynomialK":
        return cls({int(m): rf_from_json(v) for m, v in obj.items()})

    def __repr__(self):
        inner = ", ".join(f"{m}: {c.to_pretty()}" for m, c in enumerate(self.cs) if c)
        return f"QPolynomialK({{{inner}}})"


def _as_qpk(x):
    if isinstance(x, QPolynomialK):
        return x
    try:
        return QPolynomialK.constant(rf(x))
    except TypeError:
        return None


Y = QPolynomialK.monomial(1)


class QQuasiPolynomialK:
    """plain(Y) + (-1)**k signed(Y) with Y = q**k."""

    __slots__ = ("plain", "signed")

    def __init__(self, plain=None, signed=None):
        self.plain = plain if isinstance(plain, QPolynomialK) else QPolynomialK() if plain is None else _as_qpk(plain)
        self.signed = signed if isinstance(signed, QPolynomialK) else QPolynomialK() if signed is None else _as_qpk(signed)

    @property
    def degree(self) -> int:
        return max(self.plain.degree, self.signed.degree)

    @property
    def period(self) -> int:
        return 1 if self.signed.is_zero() else 2

    def eval(self, k: int) -> RationalFunction:
        v = self.plain.eval(k)
        s = self.signed.eval(k)
        return v - s if k & 1 else v + s

    __call__ = eval

    def __add__(self, other):
        o = _as_quasi(other)
        if o is None:
            return NotImplemented
        return QQuasiPolynomialK(self.plain + o.plain, self.signed + o.signed)

    __radd__ = __add__

    def __neg__(self):
        return QQuasiPolynomialK(-self.plain, -self.signed)

    def __sub__(self, other):
        o = _as_quasi(other)
        if o is None:
            return NotImplemented
        return QQuasiPolynomialK(self.plain - o.plain, self.signed - o.signed)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = _as_quasi(other)
        if o is None:
            return NotImplemented
        # ((-1)**k)**2 == 1
        return QQuasiPolynomialK(
            self.plain * o.plain + self.signed * o.signed,
            self.plain * o.signed + self.signed * o.plain,
        )

    __rmul__ = __mul__

    def __eq__(self, other):
        o = _as_quasi(other)
        if o is None:
            return NotImplemented
        return self.plain == o.plain and self.signed == o.signed

    def __hash__(self):
        return hash((self.plain, self.signed))

    def to_json_obj(self) -> dict:
        return {"plain": self.plain.to_json_obj(), "signed": self.signed.to_json_obj()}

    @classmethod
    def from_json_obj(cls, obj) -> "QQuasiPolynomialK":
        return cls(QPolynomialK.from_json_obj(obj["plain"]), QPolynomialK.from_json_obj(obj["signed"]))

    def __repr__(self):
        return f"QQuasiPolynomialK(plain={self.plain!r}, signed={self.signed!r})"


def _as_quasi(x):
    if isinstance(x, QQuasiPolynomialK):
        return x
    p = _as_qpk(x)
    return None if p is None else QQuasiPolynomialK(p)


def quasi(x) -> QQuasiPolynomialK:
    q = _as_quasi(x)
    if q is None:
        raise TypeError(f"cannot convert {type(x).__name__} to QQuasiPolynomialK")
    return q


def quasi_eval(P, k: int) -> RationalFunction:
    return quasi(P).eval(k)


def signed_part(P) -> QPolynomialK:
    return quasi(P).signed


def kfac(a: int, m: int) -> QPolynomialK:
    """[k+a;q]_m as a polynomial in Y: the product of (q**(a+i) Y - 1)/(q - 1)."""
    if m < 0:
        raise ValueError("negative length")
    inv = ONE / (q_power(1) - 1)
    out = QPolynomialK.constant(ONE)
    for i in range(m):
        out = out * QPolynomialK._raw([-inv, q_power(a + i) * inv])
    return out


def weighted_partial_sum(f) -> QQuasiPolynomialK:
    """S with S(y) = sum_{x=0}^{y} f(x) q**x; valid for every integer y (S(-1) = 0)."""
    f = quasi(f)
    plain: dict[int, RationalFunction] = {}
    signed: dict[int, RationalFunction] = {}

    def put(d, m, c):
        d[m] = d.get(m, ZERO) + c

    for m, a in enumerate(f.plain.cs):
        if a:
            r = q_power(m + 1)
            g = a / (r - 1)
            put(plain, m + 1, g * r)
            put(plain, 0, -g)
    for m, b in enumerate(f.signed.cs):
        if b:
            r = q_power(m + 1)
            g = b / (r + 1)
            put(plain, 0, g)
            put(signed, m + 1, g * r)
    return QQuasiPolynomialK(QPolynomialK(plain), QPolynomialK(signed))


def ext_range_sum(f, a: int, b: int) -> RationalFunction:
    """sum_{x=a}^{b} f(x) q**x under the extended convention for b < a."""
    S = weighted_partial_sum(f)
    return S.eval(b) - S.eval(a - 1)


def q_lagrange(nodes: Sequence[int], values: Sequence[object]) -> QPolynomialK:
    """Interpolating polynomial in Y through (q**node, value)."""
    nodes = [int(x) for x in nodes]
    if len(set(nodes)) != len(nodes):
        raise ValueError("duplicate interpolation nodes")
    if len(nodes) != len(values):
        raise ValueError("nodes and values differ in length")
    if not nodes:
        return QPolynomialK()
    zs = [q_power(x) for x in nodes]
    # Newton divided differences
    dd = [rf(v) for v in values]
    n = len(zs)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (zs[i] - zs[i - j])
    out = QPolynomialK.constant(dd[n - 1])
    for i in range(n - 2, -1, -1):
        out = out * QPolynomialK._raw([-zs[i], ONE]) + QPolynomialK.constant(dd[i])
    return out


class FitError(ValueError):
    pass


def fit_quasi(
    samples: Iterable[tuple[int, object]],
    plain_degree_bound: int,
    signed_degree_bound: int,
) -> QQuasiPolynomialK:
    """Fit a period-2 quasi-polynomial to samples (k, value) within degree bounds."""
    samples = [(int(k), rf(v)) for k, v in samples]
    ks = [k for k, _ in samples]
    if len(set(ks)) != len(ks):
        raise ValueError("duplicate sample points")
    D = max(plain_degree_bound, signed_degree_bound)
    even = [(k, v) for k, v in samples if k % 2 == 0]
    odd = [(k, v) for k, v in samples if k % 2 == 1]
    if len(even) < D + 1 or len(odd) < D + 1:
        raise ValueError("not enough samples of each parity")
    E = q_lagrange([k for k, _ in even[: D + 1]], [v for _, v in even[: D + 1]])
    O = q_lagrange([k for k, _ in odd[: D + 1]], [v for _, v in odd[: D + 1]])
    half = rf(1) / 2
    plain = (E + O) * half
    signed = (E - O) * half
    fit = QQuasiPolynomialK(plain, signed)
    if plain.degree > plain_degree_bound or signed.degree > signed_degree_bound:
        raise FitError("no quasi-polynomial fit within bounds")
    for k, v in samples:
        if fit.eval(k) != v:
            raise FitError("no quasi-polynomial fit within bounds")
    return fit
