"""Planar networks for abelian Hessenberg functions.

For abelian h the reduction only ever takes aligned steps, and the values it
visits can be laid out on lattice points (i, j) with i <= j.  From (i, j) a
path moves diagonally to (i-1, j-1) with weight [a]_q/[n-j+1]_q, where

    a = a_{i,j} = min{k >= 0 : h(i-k) < j}   if h(1) < j,   a = i otherwise

(with h(0) = 0), or vertically to (i, j-1) with the complementary weight.
Paths stop on the diagonal; the point (l, l) stands for the complete product
k_l * k_{n-l}.  Path totals are accumulated by dynamic programming in order
of decreasing j.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Dict, Mapping, Optional, Sequence, Tuple

from .dyck import Hess, from_values, is_abelian
from .qpoly import ONE, ZERO, QPoly, QRat, q_factorial, q_int, qrat_to_json

Point = Tuple[int, int]
DIAG = (-1, -1)
VERT = (0, -1)


class NetworkError(ValueError):
    pass


def a_coeff(h: Sequence[int], i: int, j: int) -> int:
    if h[0] >= j:
        return i
    k = 0
    while i - k >= 1 and h[i - k - 1] >= j:
        k += 1
    return k


def endpoint_key(l: int, n: int) -> tuple:
    big, small = max(l, n - l), min(l, n - l)
    return (big, small) if small else (big,)


def start_point(h: Sequence[int]) -> Point:
    n = len(h)
    if h[0] == n:
        return (0, n)
    i0 = max(j for j in range(1, n + 1) if h[j - 1] < n)
    return (i0, h[i0 - 1])


@dataclass
class PlanarNetwork:
    h: Hess
    start: Point
    # (point, step) -> weight
    edges: Dict[Tuple[Point, Point], QRat] = field(default_factory=dict)
    # interior point -> a_{i,j}
    a_values: Dict[Point, int] = field(default_factory=dict)
    # diagonal point (l, l) -> complete-product key
    endpoints: Dict[Point, tuple] = field(default_factory=dict)

    @property
    def n(self) -> int:
        return self.h.n

    def out_edges(self, p: Point):
        for step in (DIAG, VERT):
            w = self.edges.get((p, step))
            if w is not None:
                yield (p[0] + step[0], p[1] + step[1]), step, w

    def nodes(self) -> list[Point]:
        pts = {self.start}
        for (p, step) in self.edges:
            pts.add(p)
            pts.add((p[0] + step[0], p[1] + step[1]))
        return sorted(pts, key=lambda t: (-t[1], t[0]))

    def endpoint_totals(self) -> Dict[Point, QRat]:
        """Sum over paths from the start to each diagonal point of the
        product of edge weights."""
        acc: Dict[Point, QRat] = {self.start: ONE}
        out: Dict[Point, QRat] = {}
        for p in self.nodes():
            w = acc.pop(p, None)
            if w is None:
                continue
            if p[0] == p[1]:
                out[p] = w
                continue
            for nxt, _, ew in self.out_edges(p):
                if ew:
                    acc[nxt] = acc.get(nxt, ZERO) + w * ew
        return out

    def to_json(self) -> dict:
        return {
            "hess": list(self.h),
            "start": list(self.start),
            "nodes": [list(p) for p in self.nodes()],
            "edges": [
                {"from": list(p), "to": [p[0] + s[0], p[1] + s[1]], "kind": "diagonal" if s == DIAG else "vertical",
                 **qrat_to_json(w)}
                for (p, s), w in sorted(self.edges.items(), key=lambda kv: (-kv[0][0][1], kv[0][0][0], kv[0][1]))
            ],
            "endpoints": [{"point": list(p), "partition": list(k)} for p, k in sorted(self.endpoints.items())],
        }

    def to_dot(self) -> str:
        def name(p):
            return f'"{p[0]},{p[1]}"'

        lines = [f"digraph network {{", f'  label="h = {",".join(map(str, self.h))}";', "  rankdir=TB;"]
        for p in self.nodes():
            if p in self.endpoints:
                key = ",".join(map(str, self.endpoints[p]))
                lines.append(f'  {name(p)} [shape=box, label="({p[0]},{p[1]})\\nk[{key}]"];')
            else:
                shape = "doublecircle" if p == self.start else "circle"
                lines.append(f'  {name(p)} [shape={shape}, label="({p[0]},{p[1]})"];')
        for (p, s), w in sorted(self.edges.items(), key=lambda kv: (-kv[0][0][1], kv[0][0][0], kv[0][1])):
            q = (p[0] + s[0], p[1] + s[1])
            style = "" if s == DIAG else ", style=dashed"
            lines.append(f'  {name(p)} -> {name(q)} [label="{w}"{style}];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_network(h: Sequence[int]) -> PlanarNetwork:
    h = h if isinstance(h, Hess) else from_values(h)
    if not is_abelian(h):
        raise NetworkError(f"{tuple(h)} is not abelian")
    n = h.n
    net = PlanarNetwork(h, start_point(h))
    seen = set()
    todo = [net.start]
    while todo:
        p = todo.pop()
        if p in seen:
            continue
        seen.add(p)
        i, j = p
        if i == j:
            net.endpoints[p] = endpoint_key(i, n)
            continue
        a = a_coeff(h, i, j)
        net.a_values[p] = a
        d = QRat(q_int(a), q_int(n - j + 1))
        # zero-weight steps are kept so the lattice region is complete;
        # only the diagonal out of column 0 (weight 0) has no target
        if i > 0:
            net.edges[(p, DIAG)] = d
            todo.append((i - 1, j - 1))
        net.edges[(p, VERT)] = ONE - d
        todo.append((i, j - 1))
    return net


def evaluate_network(net: PlanarNetwork, base: Mapping[tuple, object] | None = None):
    """Path-sum value with ``base[key]`` at each endpoint; without a base the
    result is the expansion {key: total weight}."""
    totals: Dict[tuple, QRat] = {}
    for p, w in net.endpoint_totals().items():
        key = net.endpoints[p]
        totals[key] = totals.get(key, ZERO) + w
    totals = {k: v for k, v in totals.items() if v}
    if base is None:
        return totals
    acc = None
    for key, w in totals.items():
        term = base[key] * w if not callable(base) else base(key) * w
        acc = term if acc is None else acc + term
    return ZERO if acc is None else acc


def network_expansion(h: Sequence[int]) -> Dict[tuple, QRat]:
    return dict(sorted(evaluate_network(build_network(h)).items(), reverse=True))


def max_clique_condition(h: Sequence[int]) -> bool:
    """n - j0 >= h(i) - i for all i, where j0 = min{j : h(j) = n}."""
    n = len(h)
    j0 = next(j for j in range(1, n + 1) if h[j - 1] == n)
    return all(n - j0 >= h[i - 1] - i for i in range(1, n + 1))


def numerators_nonnegative(net: PlanarNetwork) -> bool:
    """Whether every step weight is a ratio of polynomials with nonnegative
    coefficients, i.e. 0 <= a_{i,j} <= n - j + 1 at every visited point."""
    n = net.n
    return all(0 <= a <= n - p[1] + 1 for p, a in net.a_values.items())


def is_manifestly_positive(h: Sequence[int]) -> bool:
    h = h if isinstance(h, Hess) else from_values(h)
    if not is_abelian(h):
        raise NetworkError(f"{tuple(h)} is not abelian")
    ok = max_clique_condition(h)
    if ok and not numerators_nonnegative(build_network(h)):
        raise AssertionError(f"clique condition holds for {tuple(h)} but a step weight is not positive")
    return ok


def endpoint_polynomials(h: Sequence[int]) -> Dict[int, QPoly]:
    """P_l = (endpoint total at (l, l)) * (n-l)!_q / (n-h(i0))!_q, so that the
    (l, l) endpoint contributes l!_q (n-h(i0))!_q P_l to the e_{n-l,l}
    coefficient.  Raises ArithmeticError if some P_l is not a polynomial."""
    net = build_network(h)
    n = net.n
    i0, top = net.start
    scale_den = q_factorial(n - top)
    out: Dict[int, QPoly] = {}
    for (l, _), w in sorted(net.endpoint_totals().items()):
        val = (w * QRat(q_factorial(n - l), scale_den)).is_polynomial()
        if val is None:
            raise ArithmeticError(f"P_{l} of {tuple(h)} is not a polynomial")
        out[l] = val
    return out


def network_json(h: Sequence[int]) -> str:
    return json.dumps(build_network(h).to_json(), sort_keys=True)
