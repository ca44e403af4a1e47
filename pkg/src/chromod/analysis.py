"""Coefficient-shape checks, closed formulas for paths and lollipops, and
the scan harness that runs the checks over all of D_n.

Shape conventions:

* palindromic with center k: c_i = c_{2k-i} for all i (zero outside range);
* unimodal: c_0 <= ... <= c_t >= ... >= c_d for some t;
* log-concave (always "with no internal zeros"): nonnegative, no zero
  strictly between nonzero coefficients, unimodal, and c_j^2 >= c_{j-1} c_{j+1}.

The zero polynomial passes every check vacuously; reports flag it separately.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import permutations
from typing import Dict, Iterable, Iterator, List, Optional, Sequence

from .dyck import GuardError, Hess, area, enumerate_hess, from_values
from .engine import CsfReducer, csf_e
from .qpoly import QPoly, QRat, q_factorial, q_int
from .symfunc import BASES, convert

log = logging.getLogger(__name__)

MAX_SCAN_N = 12
CHECKS = ("palindromic", "unimodal", "log-concave", "positive")


def _coeffs(p) -> tuple:
    if isinstance(p, QPoly):
        return p.coeffs
    if isinstance(p, QRat):
        poly = p.is_polynomial()
        if poly is None:
            raise ValueError(f"{p} is not a polynomial")
        return poly.coeffs
    return tuple(p)


def is_palindromic(p, two_k: int) -> bool:
    c = _coeffs(p)
    if two_k < 0:
        raise ValueError("two_k must be nonnegative")
    if len(c) - 1 > two_k:
        return not c
    return all(c[i] == (c[two_k - i] if two_k - i < len(c) else 0) for i in range(len(c)))


def is_unimodal(p) -> bool:
    c = _coeffs(p)
    k = 1
    while k < len(c) and c[k] >= c[k - 1]:
        k += 1
    while k < len(c) and c[k] <= c[k - 1]:
        k += 1
    return k >= len(c)


def has_internal_zeros(p) -> bool:
    c = _coeffs(p)
    nz = [i for i, v in enumerate(c) if v]
    return bool(nz) and any(not c[i] for i in range(nz[0], nz[-1] + 1))


def is_log_concave(p) -> bool:
    c = _coeffs(p)
    if any(v < 0 for v in c) or has_internal_zeros(c) or not is_unimodal(c):
        return False
    return all(c[j] * c[j] >= c[j - 1] * c[j + 1] for j in range(1, len(c) - 1))


def is_positive(p) -> bool:
    """All coefficients nonnegative."""
    return all(v >= 0 for v in _coeffs(p))


def are_synchronized(p1, p2) -> bool:
    """a_k b_k >= a_{k+1} b_{k-1} and a_k b_k >= a_{k-1} b_{k+1} for k >= 1.

    Both inputs must be log-concave."""
    a, b = _coeffs(p1), _coeffs(p2)
    if not (is_log_concave(a) and is_log_concave(b)):
        raise ValueError("synchronization is defined for log-concave polynomials")
    top = max(len(a), len(b)) + 1

    def A(i):
        return a[i] if 0 <= i < len(a) else 0

    def B(i):
        return b[i] if 0 <= i < len(b) else 0

    return all(A(k) * B(k) >= A(k + 1) * B(k - 1) and A(k) * B(k) >= A(k - 1) * B(k + 1) for k in range(1, top))


# ---------------------------------------------------------------------------
# closed formulas
# ---------------------------------------------------------------------------

def _prod(polys: Iterable[QPoly]) -> QPoly:
    out = QPoly([1])
    for p in polys:
        out = out * p
    return out


FORMS = ("displayed", "compositions")


def _path_sum(parts: Sequence[int], form: str = "displayed") -> QPoly:
    """Either sum_i [p_i] prod_{j != i} [p_j - 1] over the indices of ``parts``
    ("displayed"), or the same summand over the distinct rearrangements
    (a_1, ..., a_l) of ``parts``, [a_1] prod_{j >= 2} [a_j - 1]
    ("compositions").  The two differ by multiplicities once ``parts`` has
    repeated values or more than two parts."""
    if form == "displayed":
        total = QPoly()
        for i, li in enumerate(parts):
            total = total + q_int(li) * _prod(q_int(lj - 1) for j, lj in enumerate(parts) if j != i)
        return total
    if form == "compositions":
        if not parts:
            return QPoly([1])
        total = QPoly()
        for arr in sorted(set(permutations(parts))):
            total = total + q_int(arr[0]) * _prod(q_int(v - 1) for v in arr[1:])
        return total
    raise ValueError(f"unknown form {form!r}; choose from {FORMS}")


def path_coefficient(lam: Sequence[int], form: str = "displayed") -> QPoly:
    """e_lam coefficient of csf_q for the path (2, 3, ..., n, n) by the
    closed formula q^{l-1} sum_i [lam_i] prod_{j != i} [lam_j - 1].

    ``form="compositions"`` sums over distinct rearrangements of lam instead
    (see :func:`_path_sum`); only that form agrees with the reduction for
    every lam."""
    lam = tuple(lam)
    if not lam:
        return QPoly([1])
    return QPoly.monomial(len(lam) - 1) * _path_sum(lam, form)


def lollipop_coefficient(n: int, m: int, lam: Sequence[int], form: str = "displayed") -> QPoly:
    """e_lam coefficient of csf_q for the lollipop (2, ..., n+1, n+m, ..., n+m)
    with m > n: q^{l-1} (m-1)!_q [lam_1 - 1] sum_{i>=2} [lam_i] prod_{j>=2, j!=i} [lam_j - 1]
    when n+m > lam_1 >= m, [n+m] (m-1)!_q when lam_1 = n+m, else 0."""
    lam = tuple(lam)
    if not (m > n >= 0):
        raise ValueError(f"lollipop formula needs m > n (got n={n}, m={m})")
    if sum(lam) != n + m:
        raise ValueError(f"{lam} is not a partition of {n + m}")
    l1 = lam[0]
    if l1 == n + m:
        return q_int(n + m) * q_factorial(m - 1)
    if m <= l1 < n + m:
        return QPoly.monomial(len(lam) - 1) * q_factorial(m - 1) * q_int(l1 - 1) * _path_sum(lam[1:], form)
    return QPoly()


# ---------------------------------------------------------------------------
# reports and scans
# ---------------------------------------------------------------------------

def normalize_for_shape(c: QRat) -> Optional[QPoly]:
    """Polynomial used for shape checks: the numerator over a constant
    denominator, with sign fixed so the leading coefficient is positive.
    Returns None for a genuinely rational coefficient."""
    if c.den.degree > 0:
        return None
    num = c.num
    if num and num.coeffs[-1] < 0:
        num = -num
    return num


@dataclass
class ShapeReport:
    h: Hess
    basis: str
    checks: tuple
    flags: Dict[tuple, Dict[str, bool]] = field(default_factory=dict)
    failures: List[tuple] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "hess": list(self.h),
            "basis": self.basis,
            "checks": list(self.checks),
            "center2": area(self.h),
            "coefficients": [{"partition": list(lam), **fl} for lam, fl in self.flags.items()],
            "failures": [{"partition": list(lam), "property": prop} for lam, prop in self.failures],
            "pass": self.ok,
        }


def _resolve_checks(check: str | Sequence[str]) -> tuple:
    if isinstance(check, str):
        check = CHECKS if check == "all" else (check,)
    for c in check:
        if c not in CHECKS:
            raise ValueError(f"unknown check {c!r}; choose from {', '.join(CHECKS)} or 'all'")
    return tuple(check)


def shape_report(h: Sequence[int], basis: str = "e", check: str | Sequence[str] = "all",
                 engine: Optional[CsfReducer] = None) -> ShapeReport:
    h = h if isinstance(h, Hess) else from_values(h)
    if basis not in BASES:
        raise ValueError(f"unknown basis {basis!r}")
    checks = _resolve_checks(check)
    F = csf_e(h, engine)
    if basis != "e":
        F = convert(F, basis)
    two_k = area(h)
    rep = ShapeReport(h, basis, checks)
    for lam, c in F.coeffs.items():
        p = normalize_for_shape(c)
        fl: Dict[str, bool] = {"zero": not c}
        if p is None:
            fl["polynomial"] = False
            for name in checks:
                fl[name] = False
                rep.failures.append((lam, name))
            rep.flags[lam] = fl
            continue
        tests = {
            "palindromic": lambda: is_palindromic(p, two_k),
            "unimodal": lambda: is_unimodal(p),
            "log-concave": lambda: is_log_concave(p),
            "positive": lambda: is_positive(c.num),
        }
        for name in checks:
            fl[name] = tests[name]()
            if not fl[name]:
                rep.failures.append((lam, name))
        rep.flags[lam] = fl
    return rep


def _scan_chunk(args) -> list:
    hs, basis, checks = args
    engine = CsfReducer()
    return [shape_report(h, basis, checks, engine) for h in hs]


def scan(n: int, basis: str = "e", check: str | Sequence[str] = "log-concave", *,
         hess: Optional[Iterable[Sequence[int]]] = None, jobs: int = 1, unsafe: bool = False,
         engine: Optional[CsfReducer] = None, chunk: int = 64) -> Iterator[ShapeReport]:
    """Stream one report per h, in the lexicographic order of enumerate_hess
    (or of ``hess`` when given).  Output order does not depend on ``jobs``."""
    if n > MAX_SCAN_N and not unsafe:
        raise GuardError(f"scan limited to n <= {MAX_SCAN_N} (got {n})")
    checks = _resolve_checks(check)
    if hess is None:
        hs = list(enumerate_hess(n, unsafe=unsafe))
    else:
        hs = [from_values(h) for h in hess]
        for h in hs:
            if h.n != n:
                raise ValueError(f"{tuple(h)} does not have size {n}")
    if jobs <= 1 or len(hs) <= chunk:
        for h in hs:
            yield shape_report(h, basis, checks, engine)
        return
    parts = [(hs[k:k + chunk], basis, checks) for k in range(0, len(hs), chunk)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for reports in pool.map(_scan_chunk, parts):
            yield from reports
