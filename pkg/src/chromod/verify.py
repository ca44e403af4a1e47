"""Exhaustive consistency suites behind ``chromod verify``.

Each suite walks every admissible instance up to a size bound and compares
two independent computations.  A suite result records how many instances
were checked and the first few failures.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterator, List

from . import engine
from .analysis import is_palindromic
from .dyck import area, check_partition, conjugate, enumerate_hess, is_abelian, partitions, transpose
from .engine import RelationError
from .network import network_expansion
from .oracle import alpha_apply, chromatic_poly_q
from .qhit import R, csf_abelian_qhit
from .qpoly import QPoly, q_int

MAX_BOARD_VERIFY = 6


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failed: int = 0
    failures: List[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return self.failed == 0 and self.checked > 0

    def record(self, ok: bool, what: Callable[[], str]) -> None:
        self.checked += 1
        if not ok:
            self.failed += 1
            if len(self.failures) < 5:
                self.failures.append(what())

    def to_json(self) -> dict:
        return {"suite": self.name, "checked": self.checked, "failed": self.failed,
                "failures": self.failures, "pass": self.ok}


def _all_hess(max_n: int) -> Iterator:
    for n in range(1, max_n + 1):
        yield from enumerate_hess(n)


def _boards(max_m: int) -> Iterator[tuple]:
    """(m, lam) for every lam fitting the m x m board, 1 <= m <= max_m."""
    for m in range(1, max_m + 1):
        for size in range(m * m + 1):
            for lam in partitions(size, m):
                if len(lam) <= m:
                    yield m, lam


def suite_basicrel(max_n: int, res: SuiteResult) -> None:
    for h in _all_hess(max_n):
        n = len(h)
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                try:
                    ok = engine.verify_relation_basic(h, i, j)
                except RelationError:
                    continue
                res.record(ok, lambda: f"h={tuple(h)} i={i} j={j}")


def suite_basicreldual(max_n: int, res: SuiteResult) -> None:
    for h in _all_hess(max_n):
        n = len(h)
        for i in range(1, n + 1):
            for a in range(1, h[i - 1]):
                try:
                    ok = engine.verify_relation_basic_dual(h, i, a)
                except RelationError:
                    continue
                res.record(ok, lambda: f"h={tuple(h)} i={i} a={a}")


def suite_cv(max_n: int, res: SuiteResult) -> None:
    for h in _all_hess(max_n):
        n = len(h)
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                for a in range(1, j - i + 1):
                    for b in range(1, n + 1):
                        try:
                            ok = engine.verify_chu_vandermonde(h, i, j, a, b)
                        except RelationError:
                            continue
                        res.record(ok, lambda: f"h={tuple(h)} i={i} j={j} a={a} b={b}")


def rjm_instances(max_m: int) -> Iterator[tuple]:
    """(j, m, lam) with lam fitting E_{m-1} and j = l(lam) or j = lam_1."""
    for m, lam in _boards(max_m):
        if m < 2 or len(lam) > m - 1 or (lam and lam[0] > m - 1):
            continue
        for j in sorted({len(lam), lam[0] if lam else 0}):
            yield j, m, lam


def suite_rjm(max_n: int, res: SuiteResult) -> None:
    for j, m, lam in rjm_instances(min(max_n, MAX_BOARD_VERIFY)):
        ok = R(j, m, lam) == (q_int(m) - q_int(j)) * R(j, m - 1, lam)
        res.record(ok, lambda: f"j={j} m={m} lam={lam}")


def rjrel_instances(max_m: int) -> Iterator[tuple]:
    """(m, lam, mu, sigma): lam_{i+1} < lam_i < lam_{i-1}, with mu removing and
    sigma adding a cell in part i, sigma still inside E_m."""
    for m, lam in _boards(max_m):
        ext = (float("inf"),) + lam + (0,)
        for i in range(1, len(lam) + 1):
            if ext[i + 1] < ext[i] < ext[i - 1] and lam[i - 1] + 1 <= m:
                mu = check_partition(tuple(v for v in lam[:i - 1] + (lam[i - 1] - 1,) + lam[i:] if v))
                sigma = lam[:i - 1] + (lam[i - 1] + 1,) + lam[i:]
                yield m, lam, mu, sigma


def rjrel_holds(j: int, m: int, lam: tuple, mu: tuple, sigma: tuple, orientation: str = "modular") -> bool:
    """Three-term relation among q-hit numbers of lam, mu (cell removed) and
    sigma (cell added).

    ``"modular"``: (1+q) R(lam) = q R(sigma) + R(mu), the modular law read
    through lam^t_i = n - h(i) (lowering h adds a cell).  ``"displayed"``:
    (1+q) R(lam) = q R(mu) + R(sigma).
    """
    lhs = QPoly([1, 1]) * R(j, m, lam)
    if orientation == "modular":
        return lhs == QPoly([0, 1]) * R(j, m, sigma) + R(j, m, mu)
    if orientation == "displayed":
        return lhs == QPoly([0, 1]) * R(j, m, mu) + R(j, m, sigma)
    raise ValueError(f"unknown orientation {orientation!r}")


def suite_rjrel(max_n: int, res: SuiteResult) -> None:
    for m, lam, mu, sigma in rjrel_instances(min(max_n, MAX_BOARD_VERIFY)):
        for tr in (False, True):
            trip = (conjugate(lam), conjugate(mu), conjugate(sigma)) if tr else (lam, mu, sigma)
            for j in range(m + 1):
                res.record(rjrel_holds(j, m, *trip), lambda: f"m={m} lam={lam} j={j} transposed={tr}")


def suite_qhit_thm(max_n: int, res: SuiteResult) -> None:
    for h in _all_hess(min(max_n, 9)):
        if is_abelian(h):
            res.record(csf_abelian_qhit(h) == engine.csf_e(h), lambda: f"h={tuple(h)}")


def suite_network_eq(max_n: int, res: SuiteResult) -> None:
    for h in _all_hess(max_n):
        if is_abelian(h):
            res.record(network_expansion(h) == engine.expand(h), lambda: f"h={tuple(h)}")


def suite_transpose(max_n: int, res: SuiteResult) -> None:
    for h in _all_hess(max_n):
        res.record(engine.csf_e_coeffs(transpose(h)) == engine.csf_e_coeffs(h), lambda: f"h={tuple(h)}")
    for m, lam in _boards(min(max_n, MAX_BOARD_VERIFY - 1)):
        lt = conjugate(lam)
        for j in range(m + 1):
            res.record(R(j, m, lam) == R(j, m, lt), lambda: f"R j={j} m={m} lam={lam}")


def suite_palindromic(max_n: int, res: SuiteResult) -> None:
    for h in _all_hess(max_n):
        two_k = area(h)
        for lam, c in engine.csf_e_coeffs(h).items():
            res.record(is_palindromic(c, two_k), lambda: f"h={tuple(h)} lam={lam}")


def suite_alpha_chi(max_n: int, res: SuiteResult) -> None:
    for h in _all_hess(max_n):
        res.record(alpha_apply(engine.csf_e_coeffs(h)) == chromatic_poly_q(h), lambda: f"h={tuple(h)}")


SUITES: Dict[str, Callable[[int, SuiteResult], None]] = {
    "basicrel": suite_basicrel,
    "basicreldual": suite_basicreldual,
    "cv": suite_cv,
    "rjm": suite_rjm,
    "rjrel": suite_rjrel,
    "qhit-thm": suite_qhit_thm,
    "network-eq": suite_network_eq,
    "transpose": suite_transpose,
    "palindromic": suite_palindromic,
    "alpha-chi": suite_alpha_chi,
}


def parse_suites(spec: str) -> list[str]:
    names = [s.strip() for s in spec.split(",") if s.strip()]
    if names == ["all"]:
        return list(SUITES)
    unknown = [s for s in names if s not in SUITES]
    if unknown or not names:
        raise ValueError(f"unknown suite(s) {unknown or spec!r}; choose from all, {', '.join(SUITES)}")
    return names


def run_suite(name: str, max_n: int) -> SuiteResult:
    res = SuiteResult(name)
    t0 = time.perf_counter()
    SUITES[name](max_n, res)
    res.seconds = time.perf_counter() - t0
    return res


def run_suites(names: list[str], max_n: int) -> list[SuiteResult]:
    return [run_suite(name, max_n) for name in names]


def format_table(results: list[SuiteResult]) -> str:
    rows = [("suite", "checked", "failed", "result")]
    for r in results:
        rows.append((r.name, str(r.checked), str(r.failed), "PASS" if r.ok else "FAIL"))
    widths = [max(len(row[k]) for row in rows) for k in range(4)]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in rows]
    for r in results:
        for f in r.failures:
            lines.append(f"  {r.name}: {f}")
    return "\n".join(lines) + "\n"
