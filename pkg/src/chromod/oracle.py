"""Ground truth independent of the reduction engine.

``csf_oracle`` enumerates proper colorings directly; ``chromatic_poly_q`` and
``alpha_apply`` give the q-chromatic polynomial and the specialization of an
e-expansion to a polynomial in x.
"""

from __future__ import annotations

from collections import Counter
from math import factorial
from typing import Dict, Iterable, Mapping, Optional, Sequence

from . import kernels
from .dyck import GuardError, Hess, area_sequence, from_values
from .qpoly import ONE, ZERO, QPoly, QRat, as_qrat, q_factorial, q_int, qrat_to_json
from .symfunc import SymFunc, convert

MAX_ORACLE_N = 8


def monomial_orbit_size(lam: Sequence[int], nvars: int) -> int:
    """Number of distinct monomials x^a in ``nvars`` variables whose sorted
    exponent vector is ``lam``, i.e. the number of terms of m_lam."""
    k = len(lam)
    if k > nvars:
        return 0
    out = factorial(nvars) // factorial(nvars - k)
    for mult in Counter(lam).values():
        out //= factorial(mult)
    return out


def coloring_table(h: Sequence[int], ncolors: Optional[int] = None) -> Dict[tuple, list]:
    """Raw tallies of proper colorings by (multiplicity partition, ascents)."""
    h = h if isinstance(h, Hess) else from_values(h)
    return kernels.coloring_counts(tuple(h), h.n if ncolors is None else ncolors)


def csf_oracle(h: Sequence[int], ncolors: Optional[int] = None, unsafe: bool = False) -> SymFunc:
    """Monomial expansion of csf_q(h) from all proper colorings.

    Each coloring contributes q^asc to the monomial x^kappa; by symmetry
    every monomial of m_lam receives the same total, so the bucket for lam
    is divided by the orbit size.  A non-integral quotient means the tallies
    are not symmetric and is reported as an error.
    """
    h = h if isinstance(h, Hess) else from_values(h)
    n = h.n
    if n > MAX_ORACLE_N and not unsafe:
        raise GuardError(f"coloring oracle limited to n <= {MAX_ORACLE_N} (got {n})")
    nc = n if ncolors is None else ncolors
    if nc < n:
        raise ValueError("need at least n colors to see every monomial")
    coeffs = {}
    for lam, row in coloring_table(h, nc).items():
        orbit = monomial_orbit_size(lam, nc)
        c = []
        for v in row:
            if v % orbit:
                raise ArithmeticError(f"coloring tally for {lam} is not symmetric")
            c.append(v // orbit)
        coeffs[lam] = QPoly(c)
    return SymFunc(n, "m", coeffs)


def csf_oracle_e(h: Sequence[int]) -> SymFunc:
    return convert(csf_oracle(h), "e")


class XPoly:
    """Polynomial in x with coefficients in Q(q); ``coeffs[k]`` multiplies x^k."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        c = [as_qrat(v) for v in coeffs]
        while c and not c[-1]:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def x_minus(cls, a) -> "XPoly":
        """The linear polynomial x - a."""
        return cls([-as_qrat(a), ONE])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __eq__(self, other) -> bool:
        if not isinstance(other, XPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "XPoly") -> "XPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return XPoly([x + y for x, y in zip(a, b)] + list(a[len(b):]))

    def __sub__(self, other: "XPoly") -> "XPoly":
        return self + other.scale(QRat(-1))

    def __mul__(self, other):
        if not isinstance(other, XPoly):
            return self.scale(other)
        if not self.coeffs or not other.coeffs:
            return XPoly()
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] = out[i + j] + a * b
        return XPoly(out)

    def scale(self, c) -> "XPoly":
        c = as_qrat(c)
        return XPoly([c * v for v in self.coeffs])

    __rmul__ = scale

    def __call__(self, x) -> QRat:
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * as_qrat(x) + c
        return acc

    def __repr__(self) -> str:
        terms = [f"({c})*x^{k}" for k, c in enumerate(self.coeffs) if c]
        return "XPoly(" + (" + ".join(terms) or "0") + ")"

    def to_json(self) -> dict:
        return {"xcoeffs": [qrat_to_json(c) for c in self.coeffs]}


def chromatic_poly_q(h: Sequence[int]) -> XPoly:
    """The product of (x - [a_i]_q) over the area sequence of h."""
    out = XPoly([ONE])
    for a in area_sequence(h):
        out = out * XPoly.x_minus(q_int(a))
    return out


def _alpha_e(k: int, cache: dict = {}) -> XPoly:
    val = cache.get(k)
    if val is None:
        val = XPoly([ONE])
        for j in range(k):
            val = val * XPoly.x_minus(q_int(j))
        val = val.scale(QRat(1, q_factorial(k)))
        cache[k] = val
    return val


def alpha_apply(F: SymFunc | Mapping[tuple, object]) -> XPoly:
    """Image under the ring map sending e_k to prod_{j<k}(x - [j]_q) / k!_q."""
    if isinstance(F, SymFunc):
        if F.basis != "e":
            F = convert(F, "e")
        items = F.coeffs.items()
    else:
        items = F.items()
    total = XPoly()
    for lam, c in items:
        term = XPoly([as_qrat(c)])
        for part in lam:
            term = term * _alpha_e(part)
        total = total + term
    return total
