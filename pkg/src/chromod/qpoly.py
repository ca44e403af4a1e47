"""Exact arithmetic in Z[q] and in the rational function field Q(q).

Polynomials are stored densely as tuples of Python ints, constant term
first, with no trailing zeros (the zero polynomial is the empty tuple).
The tuple-level helpers (``padd``, ``pmul``, ...) are what the hot paths of
the engine use; :class:`QPoly` and :class:`QRat` wrap them with operators.
"""

from __future__ import annotations

from functools import lru_cache, reduce
from math import gcd
from typing import Iterable, Optional, Sequence, Union

Coeffs = tuple  # tuple[int, ...]


# ---------------------------------------------------------------------------
# tuple-level kernels
# ---------------------------------------------------------------------------

def trim(c: Sequence[int]) -> Coeffs:
    n = len(c)
    while n and not c[n - 1]:
        n -= 1
    return tuple(c[:n])


def padd(a: Coeffs, b: Coeffs) -> Coeffs:
    if len(a) < len(b):
        a, b = b, a
    if not b:
        return a
    out = list(a)
    for k, v in enumerate(b):
        out[k] += v
    return trim(out)


def psub(a: Coeffs, b: Coeffs) -> Coeffs:
    if not b:
        return a
    out = list(a) + [0] * (len(b) - len(a))
    for k, v in enumerate(b):
        out[k] -= v
    return trim(out)


def pneg(a: Coeffs) -> Coeffs:
    return tuple(-v for v in a)


def pscale(a: Coeffs, s: int) -> Coeffs:
    if not s:
        return ()
    return tuple(v * s for v in a)


def pshift(a: Coeffs, k: int) -> Coeffs:
    """Multiply by q**k."""
    if not a:
        return a
    return (0,) * k + a


def pmul(a: Coeffs, b: Coeffs) -> Coeffs:
    if not a or not b:
        return ()
    if len(a) < len(b):
        a, b = b, a
    if len(b) == 1:
        s = b[0]
        return a if s == 1 else tuple(v * s for v in a)
    out = [0] * (len(a) + len(b) - 1)
    for j, bv in enumerate(b):
        if bv:
            for i, av in enumerate(a, j):
                out[i] += av * bv
    return tuple(out)


def pdivmod(a: Coeffs, b: Coeffs) -> tuple[Coeffs, Coeffs]:
    """Division with remainder in Z[q]; requires the quotient to be integral.

    Raises ``ArithmeticError`` when a leading-coefficient division is not
    exact.  For monic ``b`` this never happens.
    """
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    db = len(b) - 1
    lc = b[-1]
    r = list(a)
    if len(r) <= db:
        return (), trim(r)
    quot = [0] * (len(r) - db)
    for k in range(len(r) - 1, db - 1, -1):
        c = r[k]
        if not c:
            continue
        t, rem = divmod(c, lc)
        if rem:
            raise ArithmeticError("non-integral quotient in Z[q] division")
        quot[k - db] = t
        off = k - db
        for i in range(db + 1):
            r[off + i] -= t * b[i]
    return trim(quot), trim(r)


def pdivexact(a: Coeffs, b: Coeffs) -> Coeffs:
    """Exact quotient a / b in Z[q]; raises ``ArithmeticError`` otherwise."""
    quot, rem = pdivmod(a, b)
    if rem:
        raise ArithmeticError("polynomial is not divisible")
    return quot


def content(a: Coeffs) -> int:
    return reduce(gcd, a, 0)


def primitive(a: Coeffs) -> Coeffs:
    """Primitive part with positive leading coefficient."""
    if not a:
        return a
    c = content(a)
    if a[-1] < 0:
        c = -c
    if c == 1:
        return a
    return tuple(v // c for v in a)


def _prem(a: Coeffs, b: Coeffs) -> Coeffs:
    """Pseudo-remainder of a by b."""
    db = len(b) - 1
    lc = b[-1]
    r = list(a)
    while len(r) - 1 >= db and r:
        k = len(r) - 1
        c = r[k]
        off = k - db
        r = [v * lc for v in r]
        for i in range(db + 1):
            r[off + i] -= c * b[i]
        r = list(trim(r))
    return tuple(r)


def pgcd(a: Coeffs, b: Coeffs) -> Coeffs:
    """Greatest common divisor in Z[q]: primitive, positive leading coefficient,
    times the integer gcd of the contents."""
    if not a:
        return primitive(b) if b else ()
    if not b:
        return primitive(a)
    ca, cb = content(a), content(b)
    c = gcd(ca, cb)
    a, b = primitive(a), primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while len(b) > 1:
        r = _prem(a, b)
        if not r:
            break
        a, b = b, primitive(r)
    else:
        # b is a nonzero constant: coprime primitive parts
        return (c,)
    return pscale(primitive(b), c)


def peval(a: Coeffs, x):
    acc = 0
    for v in reversed(a):
        acc = acc * x + v
    return acc


# ---------------------------------------------------------------------------
# QPoly
# ---------------------------------------------------------------------------

class QPoly:
    """Immutable polynomial in q with arbitrary-precision integer coefficients."""

    __slots__ = ("c",)

    def __init__(self, coeffs: Iterable[int] = ()):
        self.c = trim(tuple(int(v) for v in coeffs))

    @classmethod
    def _raw(cls, c: Coeffs) -> "QPoly":
        p = object.__new__(cls)
        p.c = c
        return p

    @classmethod
    def monomial(cls, k: int, coeff: int = 1) -> "QPoly":
        return cls._raw(pshift((coeff,), k) if coeff else ())

    @property
    def coeffs(self) -> Coeffs:
        return self.c

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.c) - 1

    def is_zero(self) -> bool:
        return not self.c

    def __bool__(self) -> bool:
        return bool(self.c)

    def __len__(self) -> int:
        return len(self.c)

    def __getitem__(self, k: int) -> int:
        return self.c[k] if 0 <= k < len(self.c) else 0

    def __iter__(self):
        return iter(self.c)

    def __eq__(self, other) -> bool:
        if isinstance(other, QPoly):
            return self.c == other.c
        if isinstance(other, int):
            return self.c == trim((other,))
        if isinstance(other, QRat):
            return other == self
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("QPoly", self.c))

    def __repr__(self) -> str:
        return f"QPoly({list(self.c)})"

    def __str__(self) -> str:
        return format_poly(self.c)

    @staticmethod
    def _coerce(other) -> Optional[Coeffs]:
        if isinstance(other, QPoly):
            return other.c
        if isinstance(other, int):
            return trim((other,))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QPoly._raw(padd(self.c, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QPoly._raw(psub(self.c, o))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QPoly._raw(psub(o, self.c))

    def __neg__(self):
        return QPoly._raw(pneg(self.c))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QPoly._raw(pmul(self.c, o))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out: Coeffs = (1,)
        for _ in range(k):
            out = pmul(out, self.c)
        return QPoly._raw(out)

    def __truediv__(self, other):
        if isinstance(other, (QPoly, int, QRat)):
            return QRat(self) / other
        return NotImplemented

    def __call__(self, x):
        return peval(self.c, x)

    def eval_at_one(self) -> int:
        return sum(self.c)

    def reverse(self) -> "QPoly":
        """Coefficient reversal q**deg * p(1/q) (trailing zeros drop out)."""
        return QPoly(reversed(self.c))


# ---------------------------------------------------------------------------
# QRat
# ---------------------------------------------------------------------------

_ONE: Coeffs = (1,)


def _canonical(num: Coeffs, den: Coeffs) -> tuple[Coeffs, Coeffs]:
    if not den:
        raise ZeroDivisionError("zero denominator")
    if not num:
        return (), _ONE
    if len(den) > 1 and len(num) > 1:
        g = pgcd(num, den)
        if len(g) > 1:
            g = primitive(g)
            num = pdivexact(num, g)
            den = pdivexact(den, g)
    c = gcd(content(num), content(den))
    if den[-1] < 0:
        c = -c
    if c != 1:
        num = tuple(v // c for v in num)
        den = tuple(v // c for v in den)
    return num, den


class QRat:
    """Element of Q(q) held in canonical form.

    ``num/den`` with gcd 1 over Q[q], the combined integer content of the
    pair equal to 1, and a positive leading coefficient on ``den``.
    Canonical form makes ``==`` and :meth:`is_polynomial` cheap.
    """

    __slots__ = ("n", "d")

    def __init__(self, num: Union["QPoly", int, Sequence[int]] = 0, den: Union["QPoly", int, Sequence[int]] = 1):
        self.n, self.d = _canonical(_as_coeffs(num), _as_coeffs(den))

    @classmethod
    def _raw(cls, n: Coeffs, d: Coeffs) -> "QRat":
        r = object.__new__(cls)
        r.n = n
        r.d = d
        return r

    @classmethod
    def from_coeffs(cls, num: Coeffs, den: Coeffs = _ONE) -> "QRat":
        return cls._raw(*_canonical(num, den))

    @property
    def num(self) -> QPoly:
        return QPoly._raw(self.n)

    @property
    def den(self) -> QPoly:
        return QPoly._raw(self.d)

    def is_zero(self) -> bool:
        return not self.n

    def __bool__(self) -> bool:
        return bool(self.n)

    def is_polynomial(self) -> Optional[QPoly]:
        """The value as a QPoly when the denominator is 1, else ``None``."""
        if self.d == _ONE:
            return QPoly._raw(self.n)
        return None

    def __eq__(self, other) -> bool:
        if isinstance(other, QRat):
            return self.n == other.n and self.d == other.d
        if isinstance(other, (QPoly, int)):
            return self.d == _ONE and self.n == _as_coeffs(other)
        return NotImplemented

    def cross_equal(self, other: "QRat") -> bool:
        """Equality by cross-multiplication (independent of canonical form)."""
        return pmul(self.n, other.d) == pmul(other.n, self.d)

    def __hash__(self) -> int:
        return hash(("QRat", self.n, self.d))

    def __repr__(self) -> str:
        return f"QRat({list(self.n)}, {list(self.d)})"

    def __str__(self) -> str:
        if self.d == _ONE:
            return format_poly(self.n)
        return f"({format_poly(self.n)})/({format_poly(self.d)})"

    @staticmethod
    def _coerce(other) -> Optional["QRat"]:
        if isinstance(other, QRat):
            return other
        if isinstance(other, QPoly):
            return QRat._raw(other.c, _ONE)
        if isinstance(other, int):
            return QRat._raw(trim((other,)), _ONE)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o.n:
            return self
        if not self.n:
            return o
        if self.d == o.d:
            if self.d == _ONE:
                return QRat._raw(padd(self.n, o.n), _ONE)
            return QRat.from_coeffs(padd(self.n, o.n), self.d)
        return QRat.from_coeffs(padd(pmul(self.n, o.d), pmul(o.n, self.d)), pmul(self.d, o.d))

    __radd__ = __add__

    def __neg__(self):
        return QRat._raw(pneg(self.n), self.d)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self.n or not o.n:
            return QRat._raw((), _ONE)
        if self.d == _ONE and o.d == _ONE:
            return QRat._raw(pmul(self.n, o.n), _ONE)
        return QRat.from_coeffs(pmul(self.n, o.n), pmul(self.d, o.d))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o.n:
            raise ZeroDivisionError("division by zero in Q(q)")
        return QRat.from_coeffs(pmul(self.n, o.d), pmul(self.d, o.n))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def scale(self, num: int, den: int = 1) -> "QRat":
        """Multiply by the rational constant num/den."""
        if not num or not self.n:
            return QRat._raw((), _ONE)
        return QRat.from_coeffs(pscale(self.n, num), pscale(self.d, den))

    def __call__(self, x):
        return peval(self.n, x) / peval(self.d, x)


def _as_coeffs(v) -> Coeffs:
    if isinstance(v, QPoly):
        return v.c
    if isinstance(v, int):
        return trim((v,))
    if isinstance(v, QRat):
        raise TypeError("nested QRat")
    return trim(tuple(int(x) for x in v))


def as_qrat(v) -> QRat:
    r = QRat._coerce(v)
    if r is None:
        raise TypeError(f"cannot interpret {v!r} as an element of Q(q)")
    return r


ZERO = QRat._raw((), _ONE)
ONE = QRat._raw(_ONE, _ONE)


# ---------------------------------------------------------------------------
# q-integers
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def q_int_coeffs(n: int) -> Coeffs:
    if n < 0:
        raise ValueError("q-integer of a negative number")
    return (1,) * n


@lru_cache(maxsize=None)
def q_factorial_coeffs(n: int) -> Coeffs:
    if n < 0:
        raise ValueError("q-factorial of a negative number")
    if n == 0:
        return _ONE
    return pmul(q_factorial_coeffs(n - 1), q_int_coeffs(n))


@lru_cache(maxsize=None)
def q_binomial_coeffs(n: int, k: int) -> Coeffs:
    if k < 0 or n < 0 or k > n:
        return ()
    return pdivexact(q_factorial_coeffs(n), pmul(q_factorial_coeffs(k), q_factorial_coeffs(n - k)))


def q_int(n: int) -> QPoly:
    """[n]_q = 1 + q + ... + q^(n-1); [0]_q = 0."""
    return QPoly._raw(q_int_coeffs(n))


def q_factorial(n: int) -> QPoly:
    return QPoly._raw(q_factorial_coeffs(n))


def q_binomial(n: int, k: int) -> QPoly:
    """Gaussian binomial; zero outside 0 <= k <= n."""
    return QPoly._raw(q_binomial_coeffs(n, k))


def eval_at_one(p: QPoly) -> int:
    return p.eval_at_one()


def reverse(p: QPoly) -> QPoly:
    return p.reverse()


def is_polynomial(a: QRat) -> Optional[QPoly]:
    return as_qrat(a).is_polynomial()


# ---------------------------------------------------------------------------
# formatting and JSON
# ---------------------------------------------------------------------------

def format_poly(c: Coeffs, var: str = "q") -> str:
    if not c:
        return "0"
    terms = []
    for k in range(len(c) - 1, -1, -1):
        v = c[k]
        if not v:
            continue
        sign = "-" if v < 0 else "+"
        a = abs(v)
        if k == 0:
            body = str(a)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if a == 1 else f"{a}*{mono}"
        terms.append((sign, body))
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def poly_to_json(p) -> list[str]:
    return [str(v) for v in _as_coeffs(p)]


def poly_from_json(data: Sequence) -> QPoly:
    return QPoly(int(v) for v in data)


def qrat_to_json(r: QRat) -> dict:
    return {"num": [str(v) for v in r.n], "den": [str(v) for v in r.d]}


def qrat_from_json(data: dict) -> QRat:
    return QRat.from_coeffs(trim(tuple(int(v) for v in data["num"])), trim(tuple(int(v) for v in data["den"])))
