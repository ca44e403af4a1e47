"""Hessenberg functions (Dyck paths) and integer partitions.

A Hessenberg function ``h`` of size ``n`` is stored as the tuple of its
values ``(h(1), ..., h(n))``; indices in the public API are 1-based, as in
the combinatorics literature.  Partitions are plain tuples of positive
integers in weakly decreasing order.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb
from typing import Iterable, Iterator, Optional, Sequence

MAX_ENUMERATE_N = 14


class HessError(ValueError):
    """Raised for sequences or words that do not describe a Dyck path."""


class GuardError(ValueError):
    """An input exceeds a size limit of an exhaustive computation.

    Callers that really want the larger run pass ``unsafe=True``.
    """


class Hess(tuple):
    """A validated Hessenberg function, i.e. a non-decreasing ``h`` with
    ``i <= h(i) <= n``.

    It is a tuple subclass, so it hashes and compares like the tuple of its
    values and can be used directly as a memo key.
    """

    __slots__ = ()

    def __new__(cls, values: Iterable[int]):
        vals = tuple(int(v) for v in values)
        n = len(vals)
        prev = 0
        for i, v in enumerate(vals, 1):
            if v < i:
                raise HessError(f"h({i}) = {v} < {i}")
            if v > n:
                raise HessError(f"h({i}) = {v} > n = {n}")
            if v < prev:
                raise HessError(f"not non-decreasing at i = {i}: h({i - 1}) = {prev} > h({i}) = {v}")
            prev = v
        return super().__new__(cls, vals)

    @property
    def n(self) -> int:
        return len(self)

    def __call__(self, i: int) -> int:
        """h(i) with the conventions h(0) = 0 and h(n+1) = n."""
        if i <= 0:
            return 0
        if i > len(self):
            return len(self)
        return self[i - 1]

    def __repr__(self) -> str:
        return f"Hess({tuple(self)})"

    def word(self) -> str:
        return to_word(self)

    def transpose(self) -> "Hess":
        return transpose(self)

    def __mul__(self, other):
        if isinstance(other, Hess):
            return product(self, other)
        return NotImplemented


def from_values(values: Sequence[int]) -> Hess:
    return Hess(values)


def _unchecked(values) -> Hess:
    return tuple.__new__(Hess, values)


def complete(n: int) -> Hess:
    """The complete Hessenberg function k_n."""
    return _unchecked((n,) * n)


def to_word(h: Sequence[int]) -> str:
    """Dyck word: h(i) north steps before the i-th east step."""
    out = []
    prev = 0
    for v in h:
        out.append("n" * (v - prev))
        out.append("e")
        prev = v
    return "".join(out)


def from_word(w: str) -> Hess:
    vals = []
    north = 0
    for pos, ch in enumerate(w.strip().lower(), 1):
        if ch == "n":
            north += 1
        elif ch == "e":
            vals.append(north)
            if north < len(vals):
                raise HessError(f"path goes below the diagonal at position {pos}")
        else:
            raise HessError(f"invalid step {ch!r} at position {pos}")
    if north != len(vals):
        raise HessError(f"unbalanced word: {north} north steps, {len(vals)} east steps")
    return Hess(vals)


def product(h1: Sequence[int], h2: Sequence[int]) -> Hess:
    n1 = len(h1)
    return _unchecked(tuple(h1) + tuple(v + n1 for v in h2))


def product_of(factors: Iterable[Sequence[int]]) -> Hess:
    out: tuple = ()
    for f in factors:
        n1 = len(out)
        out = out + tuple(v + n1 for v in f)
    return _unchecked(out)


def transpose(h: Sequence[int]) -> Hess:
    """Transpose the Dyck path: reverse the word and swap n and e."""
    w = to_word(h)
    swapped = "".join("e" if ch == "n" else "n" for ch in reversed(w))
    return from_word(swapped)


def component_bounds(h: Sequence[int]) -> list[tuple[int, int]]:
    """1-based inclusive (start, end) of each irreducible component."""
    out = []
    start = 1
    for i, v in enumerate(h, 1):
        if v == i:
            out.append((start, i))
            start = i + 1
    return out


def irreducible_components(h: Sequence[int]) -> list[Hess]:
    comps = []
    for s, t in component_bounds(h):
        comps.append(_unchecked(tuple(h[i - 1] - s + 1 for i in range(s, t + 1))))
    return comps


def is_irreducible(h: Sequence[int]) -> bool:
    n = len(h)
    return all(h[i - 1] != i for i in range(1, n))


def is_aligned(h: Sequence[int]) -> bool:
    """For every i: h(h(i)+1) > h(h(i)) or h(h(i)) = n.

    Evaluated on the whole function; this agrees with checking every
    irreducible component against its own top.
    """
    n = len(h)
    for v in h:
        hv = h[v - 1]
        if hv != n and h[v] == hv:
            return False
    return True


def is_abelian(h: Sequence[int]) -> bool:
    """h(h(1)+1) = n, reading h(n+1) as n."""
    n = len(h)
    if n == 0:
        return True
    k = h[0] + 1
    return k > n or h[k - 1] == n


def area_sequence(h: Sequence[int]) -> tuple[int, ...]:
    return tuple(v - i for i, v in enumerate(h, 1))


def area(h: Sequence[int]) -> int:
    """l(h) = sum of the area sequence (number of edges of the graph)."""
    return sum(area_sequence(h))


def edges(h: Sequence[int]) -> list[tuple[int, int]]:
    return [(i, j) for i, v in enumerate(h, 1) for j in range(i + 1, v + 1)]


def complete_product(lam: Sequence[int]) -> Hess:
    return product_of(complete(p) for p in lam)


def as_complete_product(h: Sequence[int]) -> Optional[tuple[int, ...]]:
    """Sorted block sizes if h is a product of complete functions, else None."""
    sizes = []
    for s, t in component_bounds(h):
        if h[s - 1] != t:
            return None
        sizes.append(t - s + 1)
    return tuple(sorted(sizes, reverse=True))


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def enumerate_hess(n: int, unsafe: bool = False) -> Iterator[Hess]:
    """All Hessenberg functions of size n in lexicographic order of values."""
    if n < 1 or (n > MAX_ENUMERATE_N and not unsafe):
        raise GuardError(f"n = {n} outside the supported range 1..{MAX_ENUMERATE_N}")
    vals = [0] * n

    def rec(i: int, lo: int) -> Iterator[Hess]:
        if i == n:
            yield _unchecked(vals)
            return
        for v in range(max(lo, i + 1), n + 1):
            vals[i] = v
            yield from rec(i + 1, v)

    yield from rec(0, 1)


# ---------------------------------------------------------------------------
# partitions
# ---------------------------------------------------------------------------

def check_partition(parts: Sequence[int]) -> tuple[int, ...]:
    p = tuple(int(v) for v in parts)
    if any(v < 1 for v in p):
        raise ValueError(f"partition parts must be positive: {p}")
    if any(p[k] < p[k + 1] for k in range(len(p) - 1)):
        raise ValueError(f"partition parts must be weakly decreasing: {p}")
    return p


@lru_cache(maxsize=None)
def partitions(n: int, max_part: Optional[int] = None) -> tuple[tuple[int, ...], ...]:
    """Partitions of n in reverse lexicographic order: (n), (n-1,1), ..., (1^n)."""
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def conjugate(lam: Sequence[int]) -> tuple[int, ...]:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > k) for k in range(lam[0]))


def hess_partition(h: Sequence[int]) -> tuple[int, ...]:
    """The partition lambda with conjugate (n - h(1), n - h(2), ...)."""
    n = len(h)
    return conjugate(tuple(n - v for v in h if v < n))


def path_hess(n: int) -> Hess:
    """The path graph (2, 3, ..., n, n)."""
    return _unchecked(tuple(min(i + 1, n) for i in range(1, n + 1)))


def lollipop_hess(n: int, m: int) -> Hess:
    """(2, 3, ..., n+1, n+m, ..., n+m): a path glued to a clique K_m."""
    return Hess(tuple(i + 1 for i in range(1, n + 1)) + (n + m,) * m)
