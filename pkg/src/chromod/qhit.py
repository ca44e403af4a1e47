"""q-hit numbers from weighted rook placements, and the e-expansion of
csf_q for abelian Hessenberg functions built from them.

Board conventions: the m x m board has rows 1..m numbered from bottom to top
and columns 1..m from left to right.  A placement is a permutation ``perm``
with the rook of column c in row ``perm[c-1]``.  The Young diagram of lam
occupies the cells (row i, column j) with j <= lam_{m+1-i}, i.e. it hangs
from the top-left corner.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Dict, Sequence

from . import kernels
from .dyck import GuardError, Hess, check_partition, conjugate, from_values, is_abelian
from .qpoly import QPoly, q_factorial, q_int
from .symfunc import SymFunc

MAX_BOARD = 8


class QHitError(ValueError):
    pass


def _fits(lam: tuple, m: int) -> bool:
    return (not lam or lam[0] <= m) and len(lam) <= m


def in_diagram(lam: Sequence[int], m: int, row: int, col: int) -> bool:
    """Whether cell (row, col), both 1-based, belongs to the diagram of lam."""
    k = m + 1 - row
    return k <= len(lam) and col <= lam[k - 1]


def lambda_weight(perm: Sequence[int], lam: Sequence[int], m: int | None = None) -> int:
    """Weight of one placement: the number of cells e with no rook on e, no
    rook to the left of e in its row, and, writing r for the rook in e's
    column, (e in lam and r in lam and r below e) or (e not in lam and
    (r in lam or r below e))."""
    perm = tuple(perm)
    if m is None:
        m = len(perm)
    if len(perm) != m or sorted(perm) != list(range(1, m + 1)):
        raise QHitError("placement must be a permutation of 1..m")
    lam = check_partition(lam)
    if not _fits(lam, m):
        raise QHitError(f"{lam} does not fit in the {m}x{m} board")
    col_of_row = {r: c for c, r in enumerate(perm, 1)}
    w = 0
    for col in range(1, m + 1):
        rook_row = perm[col - 1]
        rook_in = in_diagram(lam, m, rook_row, col)
        for row in range(1, m + 1):
            if col_of_row[row] <= col:
                continue
            below = rook_row < row
            if in_diagram(lam, m, row, col):
                w += rook_in and below
            else:
                w += rook_in or below
    return w


def rooks_inside(perm: Sequence[int], lam: Sequence[int], m: int | None = None) -> int:
    m = len(perm) if m is None else m
    return sum(in_diagram(lam, m, r, c) for c, r in enumerate(perm, 1))


@lru_cache(maxsize=4096)
def _rook_table(m: int, lam: tuple) -> tuple:
    return tuple(QPoly(row) for row in kernels.rook_counts(m, lam))


def rook_table(m: int, lam: Sequence[int], unsafe: bool = False) -> tuple:
    """``(R_{0,m}(lam), ..., R_{m,m}(lam))`` from one pass over all m! placements."""
    lam = check_partition(lam)
    if m < 0:
        raise QHitError("board size must be nonnegative")
    if m > MAX_BOARD and not unsafe:
        raise GuardError(f"rook enumeration limited to m <= {MAX_BOARD} (got {m})")
    if not _fits(lam, m):
        raise QHitError(f"{lam} does not fit in the {m}x{m} board")
    return _rook_table(m, lam)


def R(j: int, m: int, lam: Sequence[int], unsafe: bool = False) -> QPoly:
    """Sum of q^weight over placements with exactly j rooks inside lam."""
    table = rook_table(m, lam, unsafe=unsafe)
    if not 0 <= j <= m:
        raise QHitError(f"need 0 <= j <= m (got j={j}, m={m})")
    return table[j]


def associated_partition(h: Sequence[int]) -> tuple:
    """The partition lam whose conjugate has parts n - h(i)."""
    n = len(h)
    return conjugate(tuple(n - v for v in h if v < n))


def _require_abelian(h) -> Hess:
    h = h if isinstance(h, Hess) else from_values(h)
    if not is_abelian(h):
        raise QHitError(f"{tuple(h)} is not abelian")
    return h


def b(j: int, h: Sequence[int]) -> QPoly:
    h = _require_abelian(h)
    n = h.n
    lam = associated_partition(h)
    lam1 = lam[0] if lam else 0
    ell = len(lam)
    if j <= min(lam1, ell) and max(lam1, ell) <= n - j - 1:
        return QPoly.monomial(j) * q_int(n - 2 * j) * R(j, n - j - 1, lam)
    if sorted((lam1, ell)) == sorted((j, n - j)):
        return R(j, n - j, lam)
    return QPoly()


def csf_abelian_qhit(h: Sequence[int]) -> SymFunc:
    """sum over j <= n/2 of j!_q b_j(h) e_{(n-j, j)}."""
    h = _require_abelian(h)
    n = h.n
    coeffs: Dict[tuple, QPoly] = {}
    for j in range(n // 2 + 1):
        c = q_factorial(j) * b(j, h)
        if c:
            coeffs[(n - j, j) if j else (n,)] = c
    return SymFunc(n, "e", coeffs)


def csf_abelian_qhit_min_variant(h: Sequence[int]) -> SymFunc:
    """Alternative closed form with m = min(lam_1, l(lam)):
    m!_q R_{m,n-m}(lam) e_{n-m,m} + sum_{j<m} q^j j!_q [m-2j]_q R_{j,n-j-1}(lam) e_{n-j,j}.

    Kept for comparison with :func:`csf_abelian_qhit`."""
    h = _require_abelian(h)
    n = h.n
    lam = associated_partition(h)
    m = min(lam[0], len(lam)) if lam else 0
    coeffs: Dict[tuple, QPoly] = {}

    def key(j):
        return (n - j, j) if j else (n,)

    top = q_factorial(m) * R(m, n - m, lam)
    if top:
        coeffs[key(m)] = top
    for j in range(m):
        if m - 2 * j < 0:
            raise QHitError(f"[{m - 2 * j}]_q has a negative argument for {tuple(h)} at j={j}")
        c = QPoly.monomial(j) * q_factorial(j) * q_int(m - 2 * j) * R(j, n - j - 1, lam)
        if c:
            coeffs[key(j)] = coeffs.get(key(j), QPoly()) + c
    return SymFunc(n, "e", coeffs)
