"""Modular-law reduction of Hessenberg functions to complete products.

Every function ``f`` satisfying the modular law is determined by its values
on products of complete graphs.  :func:`expand` returns the coefficients
``c_lambda(h)`` in ``f(h) = sum c_lambda(h) f(k_lambda)`` by repeatedly
applying the three-term relation

    [b+1]_q f(h1) = [j-i]_q f(h2) + ([b+1]_q - [j-i]_q) f(h0)

with ``(i, j, b)`` picked by a deterministic step chooser, memoizing every
intermediate Hessenberg function.  :func:`csf_e` runs the same reduction
directly on the e-coefficients of the chromatic quasisymmetric function,
where every intermediate value stays in Z[q].
"""

from __future__ import annotations

import json
import logging
import os
from dataclasses import dataclass
from typing import Callable, Dict, Iterable, Mapping, Optional, Sequence

from . import dyck
from .dyck import Hess, as_complete_product
from .qpoly import (
    ONE,
    QPoly,
    QRat,
    ZERO,
    pdivexact,
    pmul,
    padd,
    poly_to_json,
    psub,
    q_factorial_coeffs,
    q_int_coeffs,
    qrat_from_json,
    qrat_to_json,
    trim,
)

log = logging.getLogger(__name__)

DEFAULT_STEP_LIMIT = 10**7
SCHEMA = "chromod/1"

Partition = tuple


class RelationError(ValueError):
    """Raised when indices do not satisfy the hypotheses of a relation."""


class EngineError(RuntimeError):
    """Internal consistency failure (step guard, non-polynomial coefficient)."""


# ---------------------------------------------------------------------------
# the three-term relation
# ---------------------------------------------------------------------------

def _cond1(h: Sequence[int], i: int) -> bool:
    if i == 1:
        return h[0] > 1
    return h[i - 2] < h[i - 1]


def relation_failures(h: Sequence[int], i: int, j: int, b: int) -> list[str]:
    """Names of the violated conditions (empty when the relation applies)."""
    n = len(h)
    if not (1 <= i < j <= n) or b < 1:
        return ["range"]
    bad = []
    if not _cond1(h, i):
        bad.append("(1) h(i-1) < h(i), or i = 1 and h(1) > 1")
    hi = h[i - 1]
    if not (j - 1 < hi and all(h[l - 1] == hi for l in range(i, j)) and hi < h[j - 1]):
        bad.append("(2) j-1 < h(i) = ... = h(j-1) < h(j)")
    if any(i <= v <= j - 2 for v in h):
        bad.append("(3) h^-1({i..j-2}) is empty")
    if not (b <= h[j - 1] - hi and hi + b <= n and all(h[hi + k - 1] == h[hi - 1] for k in range(1, b + 1))):
        bad.append("(4) h(h(i)) = h(h(i)+1) = ... = h(h(i)+b), b <= h(j) - h(i)")
    return bad


def check_relation_conditions(h: Sequence[int], i: int, j: int, b: int) -> bool:
    return not relation_failures(h, i, j, b)


def relation_children(h: Sequence[int], i: int, j: int, b: int) -> tuple[tuple, tuple]:
    """(h0, h2) for the relation at (i, j, b); no validation."""
    h0 = list(h)
    h2 = list(h)
    for l in range(i - 1, j - 1):
        h0[l] -= 1
    for l in range(i - 1, j - 2):
        h2[l] -= 1
    h2[j - 2] += b
    return tuple(h0), tuple(h2)


@dataclass(frozen=True)
class Step:
    i: int
    j: int
    b: int
    h0: Hess
    h2: Hess
    coeff_h2: QRat
    coeff_h0: QRat


def relation_coefficients(i: int, j: int, b: int) -> tuple[QRat, QRat]:
    """(coefficient of f(h2), coefficient of f(h0)); they sum to 1."""
    bq = q_int_coeffs(b + 1)
    lq = q_int_coeffs(j - i)
    c2 = QRat.from_coeffs(lq, bq)
    c0 = QRat.from_coeffs(psub(bq, lq), bq)
    return c2, c0


def apply_relation(h: Sequence[int], i: int, j: int, b: int) -> Step:
    bad = relation_failures(h, i, j, b)
    if bad:
        raise RelationError(f"relation does not apply to {tuple(h)} at (i={i}, j={j}, b={b}): " + "; ".join(bad))
    h0, h2 = relation_children(h, i, j, b)
    c2, c0 = relation_coefficients(i, j, b)
    return Step(i, j, b, Hess(h0), Hess(h2), c2, c0)


# ---------------------------------------------------------------------------
# step choosers
# ---------------------------------------------------------------------------

def choose_step_nonaligned(h: Sequence[int]) -> tuple[int, int, int]:
    n = len(h)
    for i in range(1, n + 1):
        hi = h[i - 1]
        hhi = h[hi - 1]
        if hhi < n and h[hi] == hhi:
            break
    else:
        raise RelationError(f"{tuple(h)} is aligned")
    j = next(l for l in range(i + 1, n + 1) if h[l - 1] > hi)
    hj = h[j - 1]
    b = 0
    while hi + b + 1 <= hj and h[hi + b] == hhi:
        b += 1
    return i, j, b


def choose_step_aligned(h: Sequence[int]) -> tuple[int, int, int, int]:
    """(component index, i, j, b) in global 1-based coordinates, using the
    leftmost irreducible component that is not complete."""
    for c, (s, t) in enumerate(dyck.component_bounds(h)):
        if h[s - 1] == t:
            continue
        j = next(l for l in range(s, t + 1) if h[l - 1] == t)
        i = j - 1
        while i > s and h[i - 2] == h[j - 2]:
            i -= 1
        return c, i, j, t - h[i - 1]
    raise RelationError(f"{tuple(h)} is a product of complete functions")


def choose_step(h: Sequence[int]) -> tuple[int, int, int]:
    if dyck.is_aligned(h):
        _, i, j, b = choose_step_aligned(h)
    else:
        i, j, b = choose_step_nonaligned(h)
    return i, j, b


# ---------------------------------------------------------------------------
# generic memoized reduction
# ---------------------------------------------------------------------------

class Reducer:
    """Memoized modular-law reduction over a value domain.

    Subclasses provide ``base(lam)`` (value at ``k_lam``) and
    ``combine(i, j, b, v2, v0)`` (value at ``h1`` from the values at ``h2``
    and ``h0``).  Values must be treated as immutable.
    """

    domain = "abstract"

    def __init__(self, step_limit: int = DEFAULT_STEP_LIMIT):
        self.memo: Dict[tuple, object] = {}
        self.step_limit = step_limit
        self.steps = 0

    def base(self, lam: Partition):
        raise NotImplementedError

    def combine(self, i: int, j: int, b: int, v2, v0):
        raise NotImplementedError

    def __call__(self, h: Sequence[int]):
        key = tuple(h)
        memo = self.memo
        if key in memo:
            return memo[key]
        # iterative post-order walk; deep chains must not hit the recursion limit
        stack = [key]
        pending: Dict[tuple, tuple] = {}
        while stack:
            cur = stack[-1]
            if cur in memo:
                stack.pop()
                continue
            info = pending.get(cur)
            if info is None:
                lam = as_complete_product(cur)
                if lam is not None:
                    memo[cur] = self.base(lam)
                    stack.pop()
                    continue
                i, j, b = choose_step(cur)
                h0, h2 = relation_children(cur, i, j, b)
                pending[cur] = info = (i, j, b, h0, h2)
                self.steps += 1
                if self.steps > self.step_limit:
                    raise EngineError(
                        f"step guard exceeded ({self.step_limit} relation applications) while reducing {key}"
                    )
                missing = [c for c in (h2, h0) if c not in memo]
                if missing:
                    stack.extend(missing)
                    continue
            i, j, b, h0, h2 = info
            if h2 not in memo or h0 not in memo:
                raise EngineError(f"reduction revisited {cur} before resolving it (cycle)")
            memo[cur] = self.combine(i, j, b, memo[h2], memo[h0])
            del pending[cur]
            stack.pop()
        return memo[key]

    # -- persistence -------------------------------------------------------

    def dump_record(self, h: tuple, value) -> dict:
        raise NotImplementedError

    def load_record(self, rec: dict) -> tuple[tuple, object]:
        raise NotImplementedError

    def save(self, path: str) -> int:
        """Write the memo as JSON lines (header line first); returns record count."""
        tmp = f"{path}.tmp"
        with open(tmp, "w") as fh:
            fh.write(json.dumps({"schema": SCHEMA, "kind": "memo", "domain": self.domain}) + "\n")
            for h in sorted(self.memo, key=lambda t: (len(t), t)):
                fh.write(json.dumps(self.dump_record(h, self.memo[h]), separators=(",", ":")) + "\n")
        os.replace(tmp, path)
        return len(self.memo)

    def load(self, path: str) -> int:
        """Merge records from a cache file; a missing file loads nothing."""
        if not os.path.exists(path):
            return 0
        count = 0
        with open(path) as fh:
            header = json.loads(fh.readline() or "{}")
            if header.get("schema") != SCHEMA or header.get("domain") != self.domain:
                raise ValueError(f"{path}: cache header {header} does not match {SCHEMA}/{self.domain}")
            for line in fh:
                if not line.strip():
                    continue
                h, value = self.load_record(json.loads(line))
                self.memo.setdefault(h, value)
                count += 1
        log.info("loaded %d memo records from %s", count, path)
        return count


def _lam_factorial(lam: Partition) -> tuple:
    out = (1,)
    for p in lam:
        out = pmul(out, q_factorial_coeffs(p))
    return out


class ExpansionReducer(Reducer):
    """Values are dicts partition -> QRat: the expansion in complete products."""

    domain = "expansion"

    def base(self, lam):
        return {lam: ONE}

    def combine(self, i, j, b, v2, v0):
        c2, c0 = relation_coefficients(i, j, b)
        out: Dict[Partition, QRat] = {}
        for lam, v in v2.items():
            out[lam] = c2 * v
        if c0:
            for lam, v in v0.items():
                out[lam] = out[lam] + c0 * v if lam in out else c0 * v
        return {lam: v for lam, v in out.items() if v}

    def dump_record(self, h, value):
        return {
            "h": list(h),
            "terms": [dict(partition=list(lam), **qrat_to_json(v)) for lam, v in _sorted_items(value)],
        }

    def load_record(self, rec):
        return tuple(rec["h"]), {tuple(t["partition"]): qrat_from_json(t) for t in rec["terms"]}


class CsfReducer(Reducer):
    """Values are dicts partition -> coefficient tuple in Z[q]: the e-expansion
    of the chromatic quasisymmetric function.

    Combining divides by [b+1]_q exactly; a non-zero remainder means an
    engine bug and raises :class:`EngineError`.
    """

    domain = "csf-e"

    def base(self, lam):
        return {lam: _lam_factorial(lam)}

    def combine(self, i, j, b, v2, v0):
        bq = q_int_coeffs(b + 1)
        lq = q_int_coeffs(j - i)
        rest = psub(bq, lq)
        acc: Dict[Partition, tuple] = {}
        for lam, p in v2.items():
            acc[lam] = pmul(lq, p)
        if rest:
            for lam, p in v0.items():
                t = pmul(rest, p)
                acc[lam] = padd(acc[lam], t) if lam in acc else t
        out = {}
        for lam, p in acc.items():
            if not p:
                continue
            try:
                out[lam] = pdivexact(p, bq)
            except ArithmeticError:
                raise EngineError(f"coefficient of e_{lam} not divisible by [{b + 1}]_q at step (i={i}, j={j}, b={b})")
        return out

    def dump_record(self, h, value):
        return {"h": list(h), "terms": [{"partition": list(lam), "poly": poly_to_json(p)} for lam, p in _sorted_items(value)]}

    def load_record(self, rec):
        return tuple(rec["h"]), {tuple(t["partition"]): trim(tuple(int(v) for v in t["poly"])) for t in rec["terms"]}


def _sorted_items(d: Mapping):
    return sorted(d.items(), key=lambda kv: kv[0], reverse=True)


# module-level engines shared by the convenience functions
_expansion = ExpansionReducer()
_csf = CsfReducer()


def expansion_engine() -> ExpansionReducer:
    return _expansion


def csf_engine() -> CsfReducer:
    return _csf


def expand(h: Sequence[int], engine: Optional[ExpansionReducer] = None) -> Dict[Partition, QRat]:
    """Coefficients c_lambda with h = sum c_lambda k_lambda modulo the modular law."""
    h = Hess(h)
    return dict((engine or _expansion)(h))


def expand_multiplicative(h: Sequence[int], engine: Optional[ExpansionReducer] = None) -> Dict[Partition, QRat]:
    """Expansion assuming f is multiplicative: reduce each irreducible
    component separately and merge the partitions.  Only valid for
    multiplicative f (such as csf_q); kept as an optional shortcut."""
    eng = engine or _expansion
    acc: Dict[Partition, QRat] = {(): ONE}
    for comp in dyck.irreducible_components(Hess(h)):
        part = eng(comp)
        nxt: Dict[Partition, QRat] = {}
        for lam, c in acc.items():
            for mu, d in part.items():
                key = tuple(sorted(lam + mu, reverse=True))
                nxt[key] = nxt.get(key, ZERO) + c * d
        acc = {k: v for k, v in nxt.items() if v}
    return acc


def evaluate(exp: Mapping[Partition, QRat], base: Callable[[Partition], object] | Mapping[Partition, object]):
    """sum c_lambda * base(lambda); ``base`` may be a mapping or a callable.

    Values of ``base`` need ``+`` and multiplication by QRat on the left.
    """
    total = None
    for lam, c in _sorted_items(exp):
        if callable(base):
            val = base(lam)
        else:
            if lam not in base:
                raise KeyError(f"no base value for k_{lam}")
            val = base[lam]
        term = c * val
        total = term if total is None else total + term
    return ZERO if total is None else total


def csf_e_coeffs(h: Sequence[int], engine: Optional[CsfReducer] = None) -> Dict[Partition, QPoly]:
    """e-coefficients of csf_q(h) as QPoly, keyed by partition."""
    h = Hess(h)
    return {lam: QPoly._raw(p) for lam, p in _sorted_items((engine or _csf)(h))}


def csf_e(h: Sequence[int], engine: Optional[CsfReducer] = None):
    """csf_q(h) in the elementary basis, as a SymFunc."""
    from .symfunc import SymFunc

    coeffs = csf_e_coeffs(h, engine)
    return SymFunc(len(h), "e", {lam: QRat._raw(p.c, (1,)) for lam, p in coeffs.items()})


def csf_e_from_expansion(h: Sequence[int], engine: Optional[ExpansionReducer] = None) -> Dict[Partition, QPoly]:
    """e-coefficients obtained as expansion coefficient times lambda!_q.

    Every product must be a polynomial; otherwise :class:`EngineError`."""
    out = {}
    for lam, c in _sorted_items(expand(h, engine)):
        v = c * QPoly._raw(_lam_factorial(lam))
        p = v.is_polynomial()
        if p is None:
            raise EngineError(f"coefficient of e_{lam} for {tuple(h)} is not a polynomial: {v}")
        out[lam] = p
    return out


# ---------------------------------------------------------------------------
# relation verifiers
# ---------------------------------------------------------------------------

def _csf_value(h: Sequence[int]) -> Dict[Partition, QRat]:
    return {lam: QRat._raw(p, (1,)) for lam, p in _csf(tuple(h)).items()}


def _lin(*terms) -> Dict[Partition, QRat]:
    """sum coeff * vector for (coeff, vector) pairs."""
    out: Dict[Partition, QRat] = {}
    for c, vec in terms:
        for lam, v in vec.items():
            out[lam] = out.get(lam, ZERO) + c * v
    return {k: v for k, v in out.items() if v}


def _valid(vals: Iterable[int]) -> Optional[Hess]:
    try:
        return Hess(vals)
    except dyck.HessError:
        return None


def basic_relation_instance(h: Sequence[int], i: int, j: int) -> tuple[Hess, Hess]:
    """(h0, h2) for the two-term-coefficient relation f(h1) = [j-i] f(h2) + (1-[j-i]) f(h0)."""
    n = len(h)
    if not (1 <= i < j <= n):
        raise RelationError("need 1 <= i < j <= n")
    if not _cond1(h, i):
        raise RelationError("condition (1) fails")
    hi = h[i - 1]
    if not (j - 1 < hi and all(h[l - 1] == hi for l in range(i, j))):
        raise RelationError("condition (2) fails")
    if any(i <= v <= j - 2 for v in h):
        raise RelationError("condition (3) fails")
    h0 = list(h)
    h2 = list(h)
    for l in range(i - 1, j - 1):
        h0[l] -= 1
    for l in range(i - 1, j - 2):
        h2[l] -= 1
    a, c = _valid(h0), _valid(h2)
    if a is None or c is None:
        raise RelationError("derived functions are not Hessenberg")
    return a, c


def verify_relation_basic(h: Sequence[int], i: int, j: int) -> bool:
    h0, h2 = basic_relation_instance(h, i, j)
    lq = QRat._raw(q_int_coeffs(j - i), (1,))
    lhs = _csf_value(h)
    rhs = _lin((lq, _csf_value(h2)), (ONE - lq, _csf_value(h0)))
    return lhs == rhs


def basic_dual_instance(h: Sequence[int], i: int, a: int) -> tuple[Hess, Hess]:
    n = len(h)
    if not (1 <= i <= n):
        raise RelationError("need 1 <= i <= n")
    if not _cond1(h, i):
        raise RelationError("condition (1) fails")
    hi = h[i - 1]
    if not (1 <= a < hi):
        raise RelationError("need 1 <= a < h(i)")
    if not all(h[k - 1] == h[hi - 1] for k in range(a + 1, hi + 1)):
        raise RelationError("condition (2) fails: h(a+1) = ... = h(h(i))")
    h0 = list(h)
    h2 = list(h)
    h0[i - 1] = a
    h2[i - 1] = a + 1
    x, y = _valid(h0), _valid(h2)
    if x is None or y is None:
        raise RelationError("derived functions are not Hessenberg")
    return x, y


def verify_relation_basic_dual(h: Sequence[int], i: int, a: int) -> bool:
    h0, h2 = basic_dual_instance(h, i, a)
    k = QRat._raw(q_int_coeffs(h[i - 1] - a), (1,))
    lhs = _csf_value(h)
    rhs = _lin((k, _csf_value(h2)), (ONE - k, _csf_value(h0)))
    return lhs == rhs


def chu_vandermonde_instance(h: Sequence[int], i: int, j: int, a: int, b: int) -> list[Hess]:
    """The functions h_0, ..., h_a of the generalised relation.

    h_k lowers h by a on {i, ..., j-1-k} and raises it by b on {j-k, ..., j-1}.
    """
    n = len(h)
    if not (1 <= i < j <= n) or a < 1 or b < 1:
        raise RelationError("need 1 <= i < j <= n and a, b >= 1")
    hi = h[i - 1]
    if not ((i == 1 and h[0] > a) or (i > 1 and h[i - 2] + a <= hi)):
        raise RelationError("condition (1) fails")
    if not (j - 1 < hi and all(h[l - 1] == hi for l in range(i, j)) and hi < h[j - 1]):
        raise RelationError("condition (2) fails")
    if any(i <= v <= j - 2 for v in h):
        raise RelationError("condition (3) fails")
    if not (b <= h[j - 1] - hi and hi - a + 1 >= 1 and hi + b <= n):
        raise RelationError("condition (4) fails: b out of range")
    ref = h[hi - 1]
    if not all(h[k - 1] == ref for k in range(hi - a + 1, hi + b + 1)):
        raise RelationError("condition (4) fails: h not constant on [h(i)-a+1, h(i)+b]")
    if a > j - i:
        raise RelationError("need a <= j - i")
    out = []
    for k in range(a + 1):
        v = list(h)
        for l in range(i, j - k):
            v[l - 1] -= a
        for l in range(j - k, j):
            v[l - 1] += b
        hk = _valid(v)
        if hk is None:
            raise RelationError(f"h_{k} is not Hessenberg")
        out.append(hk)
    return out


def q_binomial_general(top: int, k: int) -> QRat:
    """q-binomial coefficient prod_{t<k} (1 - q^(top-t)) / (1 - q^(t+1)),
    also for negative ``top``, where it is the Laurent polynomial
    (-1)^k q^-(k m + k(k-1)/2) [m+k-1 choose k]_q with m = -top."""
    from .qpoly import q_binomial_coeffs, pshift

    if k < 0:
        return ZERO
    if top >= 0:
        return QRat._raw(q_binomial_coeffs(top, k), (1,)) if k <= top else ZERO
    m = -top
    c = q_binomial_coeffs(m + k - 1, k)
    if k % 2:
        c = tuple(-v for v in c)
    return QRat.from_coeffs(c, pshift((1,), k * m + k * (k - 1) // 2))


def _q_power(e: int) -> QRat:
    from .qpoly import pshift

    return QRat._raw(pshift((1,), e), (1,)) if e >= 0 else QRat.from_coeffs((1,), pshift((1,), -e))


def chu_vandermonde_terms(i: int, j: int, a: int, b: int, convention: str = "relations") -> list[QRat]:
    """Coefficients of f(h_0), ..., f(h_a) with l = j - i.

    ``convention="relations"`` uses q^((a-k)(l-k)), the form that reduces to
    the three-term relation at a = 1; ``convention="literal"`` uses the
    exponent k(b-l+k).  When a + b < l the first q-binomial has a negative
    upper argument and is taken in its Laurent-polynomial extension.
    """
    if convention not in ("relations", "literal"):
        raise ValueError(f"unknown convention {convention!r}")
    l = j - i
    out = []
    for k in range(a + 1):
        e = k * (b - l + k) if convention == "literal" else (a - k) * (l - k)
        out.append(_q_power(e) * q_binomial_general(a + b - l, a - k) * q_binomial_general(l, k))
    return out


def verify_chu_vandermonde(h: Sequence[int], i: int, j: int, a: int, b: int, convention: str = "relations") -> bool:
    hs = chu_vandermonde_instance(h, i, j, a, b)
    coeffs = chu_vandermonde_terms(i, j, a, b, convention)
    from .qpoly import q_binomial_coeffs

    lhs = _lin((QRat._raw(q_binomial_coeffs(a + b, a), (1,)), _csf_value(h)))
    rhs = _lin(*[(c, _csf_value(hk)) for c, hk in zip(coeffs, hs)])
    return lhs == rhs
