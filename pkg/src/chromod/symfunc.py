"""Homogeneous symmetric functions over Q(q) in the m, e, s and p bases.

Conversions go through the monomial basis.  The transition matrices to
``m`` are computed by direct counting (0-1 matrices for ``e``, semistandard
tableaux for ``s``, part assignments for ``p``) and inverted exactly over Q
once per degree.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Dict, Mapping, Sequence

from .dyck import check_partition, partitions
from .qpoly import QRat, ZERO, as_qrat, padd, pscale, qrat_from_json, qrat_to_json

BASES = ("m", "e", "s", "p")

Partition = tuple


class SymFunc:
    """Degree-n symmetric function: ``basis`` tag plus partition -> QRat map."""

    __slots__ = ("degree", "basis", "coeffs")

    def __init__(self, degree: int, basis: str, coeffs: Mapping[Partition, object]):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        clean: Dict[Partition, QRat] = {}
        for lam, c in coeffs.items():
            lam = tuple(lam)
            if sum(lam) != degree:
                raise ValueError(f"partition {lam} does not have weight {degree}")
            c = as_qrat(c)
            if c:
                clean[lam] = c
        self.degree = degree
        self.basis = basis
        self.coeffs = dict(sorted(clean.items(), reverse=True))

    def coefficient(self, lam: Sequence[int]) -> QRat:
        lam = tuple(lam)
        if sum(lam) != self.degree:
            raise ValueError(f"partition {lam} does not have weight {self.degree}")
        return self.coeffs.get(lam, ZERO)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymFunc):
            return NotImplemented
        if self.degree != other.degree:
            return False
        if self.basis != other.basis:
            other = convert(other, self.basis)
        return self.coeffs == other.coeffs

    def __add__(self, other: "SymFunc") -> "SymFunc":
        if other.basis != self.basis:
            other = convert(other, self.basis)
        out = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            out[lam] = out.get(lam, ZERO) + c
        return SymFunc(self.degree, self.basis, out)

    def __sub__(self, other: "SymFunc") -> "SymFunc":
        return self + other.scale(QRat(-1))

    def scale(self, c) -> "SymFunc":
        c = as_qrat(c)
        return SymFunc(self.degree, self.basis, {lam: c * v for lam, v in self.coeffs.items()})

    def __repr__(self) -> str:
        terms = " + ".join(f"({c})*{self.basis}{list(lam)}" for lam, c in self.coeffs.items())
        return f"SymFunc[{self.basis}, deg {self.degree}]({terms or '0'})"

    def to_basis(self, basis: str) -> "SymFunc":
        return convert(self, basis)

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "basis": self.basis,
            "coeffs": [dict(partition=list(lam), **qrat_to_json(c)) for lam, c in self.coeffs.items()],
        }

    @classmethod
    def from_json(cls, data: dict) -> "SymFunc":
        return cls(data["degree"], data["basis"], {tuple(t["partition"]): qrat_from_json(t) for t in data["coeffs"]})


def coefficient(F: SymFunc, lam: Sequence[int]) -> QRat:
    return F.coefficient(lam)


# ---------------------------------------------------------------------------
# expansions of single basis elements in monomials
# ---------------------------------------------------------------------------

def _count_01_matrices(rows: tuple, cols: tuple) -> int:
    """Number of 0-1 matrices with the given row and column sums."""

    @lru_cache(maxsize=None)
    def rec(remaining: tuple, k: int) -> int:
        if k == len(cols):
            return 1 if not any(remaining) else 0
        need = cols[k]
        # choose which rows receive a 1 in column k
        total = 0
        idx = [r for r, v in enumerate(remaining) if v > 0]
        if len(idx) < need:
            return 0

        def choose(start: int, left: int, rem: list) -> None:
            nonlocal total
            if left == 0:
                total += rec(tuple(sorted(rem, reverse=True)), k + 1)
                return
            for p in range(start, len(idx) - left + 1):
                r = idx[p]
                rem[r] -= 1
                choose(p + 1, left - 1, rem)
                rem[r] += 1

        choose(0, need, list(remaining))
        return total

    return rec(tuple(sorted(rows, reverse=True)), 0)


@lru_cache(maxsize=None)
def kostka(shape: tuple, content: tuple) -> int:
    """Number of SSYT of the given shape and content (content a composition).

    The cells holding the largest entry form a horizontal strip; peel it off
    and recurse.
    """
    if not content:
        return 1 if not shape else 0
    k = content[-1]
    rest = content[:-1]
    if sum(shape) != sum(content):
        return 0
    total = 0
    # inner shapes mu with shape/mu a horizontal strip of size k:
    # shape[r+1] <= mu[r] <= shape[r]
    L = len(shape)

    def rec(r: int, left: int, mu: list) -> None:
        nonlocal total
        if r == L:
            if left == 0:
                total += kostka(tuple(v for v in mu if v), rest)
            return
        lo = shape[r + 1] if r + 1 < L else 0
        for v in range(shape[r], lo - 1, -1):
            take = shape[r] - v
            if take > left:
                break
            mu.append(v)
            rec(r + 1, left - take, mu)
            mu.pop()

    rec(0, k, [])
    return total


def _p_to_m_count(parts: tuple, target: tuple) -> int:
    """Number of maps from the parts of lambda to the variables 1..l(mu) whose
    fibres sum to mu: the coefficient of x^mu in p_lambda."""

    @lru_cache(maxsize=None)
    def rec(k: int, remaining: tuple) -> int:
        if k == len(parts):
            return 1 if not any(remaining) else 0
        v = parts[k]
        total = 0
        for r, cap in enumerate(remaining):
            if cap >= v:
                nxt = remaining[:r] + (cap - v,) + remaining[r + 1:]
                total += rec(k + 1, nxt)
        return total

    return rec(0, tuple(target))


def expand_in_monomials(basis: str, lam: Sequence[int], num_vars: int | None = None) -> Dict[Partition, int]:
    """Monomial coefficients of e_lam, s_lam, p_lam (or m_lam itself).

    ``num_vars`` limits the monomials to at most that many variables; the
    default (the degree) gives the full expansion.
    """
    lam = check_partition(lam)
    n = sum(lam)
    if num_vars is None:
        num_vars = n
    out: Dict[Partition, int] = {}
    for mu in partitions(n):
        if len(mu) > num_vars:
            continue
        if basis == "m":
            c = 1 if mu == lam else 0
        elif basis == "e":
            c = _count_01_matrices(lam, mu)
        elif basis == "s":
            c = kostka(lam, mu)
        elif basis == "p":
            c = _p_to_m_count(lam, mu)
        else:
            raise ValueError(f"unknown basis {basis!r}")
        if c:
            out[mu] = c
    return out


# ---------------------------------------------------------------------------
# transition matrices
# ---------------------------------------------------------------------------

_lock = threading.Lock()
_to_m: Dict[tuple, list] = {}
_from_m: Dict[tuple, list] = {}


def to_m_matrix(basis: str, n: int) -> list[list[int]]:
    """Rows indexed by partitions(n) in the source basis, columns by m."""
    key = (basis, n)
    mat = _to_m.get(key)
    if mat is None:
        parts = partitions(n)
        index = {mu: k for k, mu in enumerate(parts)}
        mat = []
        for lam in parts:
            row = [0] * len(parts)
            for mu, c in expand_in_monomials(basis, lam).items():
                row[index[mu]] = c
            mat.append(row)
        with _lock:
            mat = _to_m.setdefault(key, mat)
    return mat


def _invert(mat: list[list[int]]) -> list[list[Fraction]]:
    N = len(mat)
    a = [[Fraction(v) for v in row] + [Fraction(int(r == c)) for c in range(N)] for r, row in enumerate(mat)]
    for col in range(N):
        piv = next((r for r in range(col, N) if a[r][col] != 0), None)
        if piv is None:
            raise ArithmeticError("singular transition matrix")
        a[col], a[piv] = a[piv], a[col]
        pv = a[col][col]
        if pv != 1:
            a[col] = [v / pv for v in a[col]]
        for r in range(N):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                rowc = a[col]
                a[r] = [x - f * y for x, y in zip(a[r], rowc)]
    return [row[N:] for row in a]


def from_m_matrix(basis: str, n: int) -> list[list[Fraction]]:
    """Inverse of :func:`to_m_matrix` (exact, over Q)."""
    key = (basis, n)
    inv = _from_m.get(key)
    if inv is None:
        inv = _invert(to_m_matrix(basis, n))
        with _lock:
            inv = _from_m.setdefault(key, inv)
    return inv


def _combine(vec: Sequence[QRat], mat: Sequence[Sequence], n: int) -> Dict[Partition, QRat]:
    """out[col] = sum_row vec[row] * mat[row][col] with rational scalars."""
    parts = partitions(n)
    out: Dict[Partition, QRat] = {}
    live = [(r, v) for r, v in enumerate(vec) if v]
    for col, mu in enumerate(parts):
        # group by denominator so most additions stay in Z[q]
        groups: Dict[tuple, list] = {}
        for r, v in live:
            s = mat[r][col]
            if not s:
                continue
            s = Fraction(s)
            groups.setdefault(v.d, []).append((v.n, s))
        total = ZERO
        for den, terms in groups.items():
            # common integer denominator of the scalars
            L = 1
            for _, s in terms:
                L = L * s.denominator // gcd(L, s.denominator)
            acc: tuple = ()
            for num, s in terms:
                acc = padd(acc, pscale(num, s.numerator * (L // s.denominator)))
            if acc:
                total = total + QRat.from_coeffs(acc, pscale(den, L))
        if total:
            out[mu] = total
    return out


def convert(F: SymFunc, target: str) -> SymFunc:
    """Exact change of basis, via the monomial basis."""
    if target not in BASES:
        raise ValueError(f"unknown basis {target!r}")
    if F.basis == target:
        return F
    n = F.degree
    parts = partitions(n)
    vec = [F.coeffs.get(lam, ZERO) for lam in parts]
    if F.basis != "m":
        vec_m = _combine(vec, to_m_matrix(F.basis, n), n)
        vec = [vec_m.get(lam, ZERO) for lam in parts]
    if target == "m":
        return SymFunc(n, "m", {lam: v for lam, v in zip(parts, vec) if v})
    return SymFunc(n, target, _combine(vec, from_m_matrix(target, n), n))


def basis_element(basis: str, lam: Sequence[int]) -> SymFunc:
    lam = check_partition(lam)
    return SymFunc(sum(lam), basis, {lam: QRat(1)})
