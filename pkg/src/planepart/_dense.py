"""Dense integer polynomial kernels.

Polynomials are lists of Python ints, constant term first, with no trailing
zeros (the zero polynomial is ``[]``).  Everything here is exact; rational
scalars are handled one level up in :mod:`planepart.exactq`.
"""

from functools import lru_cache, reduce
from math import gcd as igcd

_SCHOOLBOOK_CUTOFF = 12


def trim(a):
    i = len(a)
    while i and not a[i - 1]:
        i -= 1
    return a[:i] if i != len(a) else a


def content(a):
    return reduce(igcd, a, 0)


def primitive(a):
    """Return ``(unit_content, p)`` with ``a == unit_content * p``, ``p[-1] > 0``."""
    if not a:
        return 0, []
    cont = content(a)
    if a[-1] < 0:
        cont = -cont
    if cont == 1:
        return 1, a
    return cont, [x // cont for x in a]


def add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] += x
    return trim(out)


def scale(a, s):
    if not s:
        return []
    return [s * x for x in a]


def shift(a, k):
    """Multiply by x**k, k >= 0."""
    return [0] * k + a if a else []


def _pack(a, bits):
    v = 0
    for x in reversed(a):
        v = (v << bits) + x
    return v


def _unpack(v, bits, n=None):
    """Balanced base-2**bits digits of v, lowest first."""
    mask = (1 << bits) - 1
    half = 1 << (bits - 1)
    full = 1 << bits
    out = []
    if n is None:
        while v:
            r = v & mask
            if r >= half:
                r -= full
            out.append(r)
            v = (v - r) >> bits
        return out
    for _ in range(n):
        r = v & mask
        if r >= half:
            r -= full
        out.append(r)
        v = (v - r) >> bits
    return out


def maxnorm(a):
    return max(abs(x) for x in a) if a else 0


def mul(a, b):
    if not a or not b:
        return []
    la, lb = len(a), len(b)
    if la == 1:
        return [a[0] * x for x in b]
    if lb == 1:
        return [b[0] * x for x in a]
    if min(la, lb) <= _SCHOOLBOOK_CUTOFF:
        if la < lb:
            a, b, la, lb = b, a, lb, la
        out = [0] * (la + lb - 1)
        for j, y in enumerate(b):
            if y:
                for i, x in enumerate(a):
                    out[i + j] += x * y
        return out
    # Kronecker substitution: one big-integer product
    bound = maxnorm(a) * maxnorm(b) * min(la, lb)
    bits = bound.bit_length() + 2
    return _unpack(_pack(a, bits) * _pack(b, bits), bits, la + lb - 1)


def power(a, k):
    out = [1]
    base = a
    while k:
        if k & 1:
            out = mul(out, base)
        k >>= 1
        if k:
            base = mul(base, base)
    return out


def divexact(a, b):
    """Quotient of a by b over Z, or None when b does not divide a."""
    if not b:
        raise ZeroDivisionError("zero divisor")
    if not a:
        return []
    db = len(b) - 1
    if len(a) - 1 < db:
        return None
    if db == 0:
        lb = b[0]
        out = []
        for x in a:
            qq, r = divmod(x, lb)
            if r:
                return None
            out.append(qq)
        return out
    rem = list(a)
    lb = b[-1]
    quot = [0] * (len(a) - db)
    for i in range(len(a) - 1 - db, -1, -1):
        coef = rem[i + db]
        if coef:
            qq, r = divmod(coef, lb)
            if r:
                return None
            quot[i] = qq
            for j in range(db):
                rem[i + j] -= qq * b[j]
            rem[i + db] = 0
    if any(rem[:db]):
        return None
    return quot


def _prem(a, b):
    """Pseudo-remainder of a by b."""
    rem = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(rem) - 1 >= db and rem:
        lr = rem[-1]
        k = len(rem) - 1 - db
        rem = [lb * x for x in rem]
        for j in range(db + 1):
            rem[k + j] -= lr * b[j]
        rem = trim(rem)
    return rem


def _prs_gcd(a, b):
    _, a = primitive(a)
    _, b = primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _prem(a, b)
        a = b
        b = primitive(r)[1] if r else []
    return a


def _heu_gcd(a, b):
    xi = 2 * min(maxnorm(a), maxnorm(b)) + 2
    bits = xi.bit_length() + 1
    for _ in range(6):
        h = igcd(_pack(a, bits), _pack(b, bits))
        cand = primitive(_unpack(h, bits))[1]
        if cand and divexact(a, cand) is not None and divexact(b, cand) is not None:
            return cand
        bits = bits * 2 + 7
    return None


def gcd(a, b):
    """Primitive gcd with positive leading coefficient (``[]`` iff both are zero)."""
    if not a:
        return primitive(b)[1]
    if not b:
        return primitive(a)[1]
    _, a = primitive(a)
    _, b = primitive(b)
    if len(a) == 1 or len(b) == 1:
        return [1]
    if a == b:
        return a
    h = _heu_gcd(a, b)
    if h is None:
        h = _prs_gcd(a, b)
    return h


def evaluate(a, num, den):
    """Return (N, D) with a(num/den) == N / D and D = den**deg(a)."""
    if not a:
        return 0, 1
    d = len(a) - 1
    total = 0
    dp = 1
    for x in reversed(a):
        total = total * num + x * dp
        dp *= den
    return total, den**d


@lru_cache(maxsize=None)
def cyclotomic(n):
    """Coefficients of the n-th cyclotomic polynomial."""
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = divexact(poly, list(cyclotomic(d)))
    return tuple(poly)


def divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]
