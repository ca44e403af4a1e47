"""Command-line interface: ``chromod <command> ...``.

Exit codes: 0 success, 1 internal or consistency failure, 2 usage or input
error.  All JSON output carries ``"schema": "chromod/1"``, uses sorted keys
and writes integers inside polynomials as decimal strings.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from typing import Optional, Sequence

from . import __version__
from .analysis import CHECKS, scan
from .dyck import Hess, from_values, from_word
from .engine import (
    DEFAULT_STEP_LIMIT,
    SCHEMA,
    EngineError,
    csf_e,
    csf_engine,
    expand,
    expansion_engine,
)
from .network import build_network
from .oracle import chromatic_poly_q, csf_oracle
from .qhit import R, csf_abelian_qhit, rook_table
from .qpoly import poly_to_json, qrat_to_json
from .symfunc import BASES, SymFunc, convert
from .verify import format_table, parse_suites, run_suites

log = logging.getLogger("chromod")

CACHE_ENV = "CHROMOD_CACHE"


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# helpers
# ---------------------------------------------------------------------------

def _ints(text: str, what: str) -> tuple:
    try:
        vals = tuple(int(t) for t in text.replace(" ", "").split(",") if t != "")
    except ValueError:
        raise UsageError(f"{what} must be a comma-separated list of integers, got {text!r}") from None
    return vals


def _hess_from_args(args) -> Hess:
    if args.hess is not None:
        return from_values(_ints(args.hess, "--hess"))
    return from_word(args.word)


def _emit(obj: dict, out) -> None:
    out.write(json.dumps({"schema": SCHEMA, **obj}, sort_keys=True) + "\n")


def symfunc_json(F: SymFunc) -> dict:
    if F.basis == "e":
        coeffs = []
        for lam, c in F.coeffs.items():
            p = c.is_polynomial()
            coeffs.append({"partition": list(lam), "poly": poly_to_json(p)} if p is not None
                          else {"partition": list(lam), **qrat_to_json(c)})
    else:
        coeffs = [{"partition": list(lam), **qrat_to_json(c)} for lam, c in F.coeffs.items()]
    return {"degree": F.degree, "basis": F.basis, "coeffs": coeffs}


def _cache_path(args) -> Optional[str]:
    return args.cache or os.environ.get(CACHE_ENV) or None


def _load_cache(eng, path: Optional[str]) -> None:
    if path:
        eng.load(path)


def _save_cache(eng, path: Optional[str]) -> None:
    if path:
        eng.save(path)


def _step_limit(args):
    return 10**12 if args.unsafe else DEFAULT_STEP_LIMIT


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_csf(args, out) -> int:
    h = _hess_from_args(args)
    eng = csf_engine()
    eng.step_limit = _step_limit(args)
    path = _cache_path(args)
    _load_cache(eng, path)
    F = csf_e(h, eng)
    if args.basis != "e":
        F = convert(F, args.basis)
    _save_cache(eng, path)
    _emit({"command": "csf", "hess": list(h), **symfunc_json(F)}, out)
    return 0


def cmd_expand(args, out) -> int:
    h = _hess_from_args(args)
    eng = expansion_engine()
    eng.step_limit = _step_limit(args)
    path = _cache_path(args)
    path = f"{path}.expansion" if path else None
    _load_cache(eng, path)
    exp = expand(h, eng)
    _save_cache(eng, path)
    terms = [{"partition": list(lam), **qrat_to_json(c)} for lam, c in sorted(exp.items(), reverse=True)]
    _emit({"command": "expand", "hess": list(h), "terms": terms}, out)
    return 0


def cmd_oracle(args, out) -> int:
    h = _hess_from_args(args)
    F = csf_oracle(h, unsafe=args.unsafe)
    _emit({"command": "oracle", "hess": list(h), **symfunc_json(F)}, out)
    return 0


def cmd_chi_q(args, out) -> int:
    h = _hess_from_args(args)
    _emit({"command": "chi-q", "hess": list(h), **chromatic_poly_q(h).to_json()}, out)
    return 0


def cmd_qhit(args, out) -> int:
    lam = tuple(v for v in _ints(args.lam, "--lambda") if v) if args.lam else ()
    table = rook_table(args.m, lam, unsafe=args.unsafe)
    payload = {"command": "qhit", "lambda": list(lam), "m": args.m}
    if args.j is not None:
        payload["j"] = args.j
        payload["poly"] = poly_to_json(R(args.j, args.m, lam, unsafe=args.unsafe))
    else:
        payload["polys"] = [poly_to_json(p) for p in table]
    _emit(payload, out)
    return 0


def cmd_csf_abelian(args, out) -> int:
    h = _hess_from_args(args)
    _emit({"command": "csf-abelian", "hess": list(h), **symfunc_json(csf_abelian_qhit(h))}, out)
    return 0


def cmd_network(args, out) -> int:
    net = build_network(_hess_from_args(args))
    if args.emit == "dot":
        out.write(net.to_dot())
    else:
        _emit({"command": "network", **net.to_json()}, out)
    return 0


def cmd_scan(args, out) -> int:
    if args.n < 1:
        raise UsageError("--n must be positive")
    hess = [from_values(_ints(t, "--hess")) for t in args.hess] if args.hess else None
    eng = None
    path = _cache_path(args)
    if args.jobs <= 1:
        eng = csf_engine()
        eng.step_limit = _step_limit(args)
        _load_cache(eng, path)
    total = failed = 0
    for rep in scan(args.n, args.basis, args.check, hess=hess, jobs=args.jobs, unsafe=args.unsafe, engine=eng):
        total += 1
        failed += not rep.ok
        if args.format == "jsonl":
            _emit({"command": "scan", **rep.to_json()}, out)
        else:
            status = "PASS" if rep.ok else "FAIL " + " ".join(
                f"{','.join(map(str, lam))}:{prop}" for lam, prop in rep.failures)
            out.write(f"{','.join(map(str, rep.h))}  {status}\n")
    if eng is not None:
        _save_cache(eng, path)
    if args.format == "table":
        out.write(f"# scanned {total}, failing {failed}\n")
    if args.expect_all_pass and failed:
        return 1
    return 0


def cmd_verify(args, out) -> int:
    names = parse_suites(args.suite)
    results = run_suites(names, args.max_n)
    if args.format == "json":
        _emit({"command": "verify", "max_n": args.max_n, "suites": [r.to_json() for r in results]}, out)
    else:
        out.write(format_table(results))
    return 0 if all(r.ok for r in results) else 1


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def _add_hess(p: argparse.ArgumentParser) -> None:
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--hess", help="values h(1),...,h(n), e.g. 2,4,4,5,5")
    g.add_argument("--word", help="Dyck word over n/e, e.g. nnenee")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cache", help=f"memo cache file (default: ${CACHE_ENV})")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for scans")
    common.add_argument("--unsafe", action="store_true", help="lift size guards")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="chromod", description="Chromatic quasisymmetric functions of indifference graphs.")
    parser.add_argument("--version", action="version", version=f"chromod {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("csf", parents=[common], help="csf_q(h) via the modular-law reduction")
    _add_hess(p)
    p.add_argument("--basis", choices=BASES, default="e")
    p.set_defaults(func=cmd_csf)

    p = sub.add_parser("expand", parents=[common], help="expansion in complete products")
    _add_hess(p)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("oracle", parents=[common], help="brute-force m-expansion from colorings")
    _add_hess(p)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("chi-q", parents=[common], help="q-chromatic polynomial")
    _add_hess(p)
    p.set_defaults(func=cmd_chi_q)

    p = sub.add_parser("qhit", parents=[common], help="q-hit numbers R_{j,m}(lambda)")
    p.add_argument("--lambda", dest="lam", default="", help="partition, e.g. 4,3,2,2")
    p.add_argument("--m", type=int, required=True, help="board size")
    p.add_argument("--j", type=int, help="rooks inside lambda (default: all j)")
    p.set_defaults(func=cmd_qhit)

    p = sub.add_parser("csf-abelian", parents=[common], help="csf_q(h) of abelian h from q-hit numbers")
    _add_hess(p)
    p.set_defaults(func=cmd_csf_abelian)

    p = sub.add_parser("network", parents=[common], help="planar network of an abelian h")
    _add_hess(p)
    p.add_argument("--emit", choices=("dot", "json"), default="json")
    p.set_defaults(func=cmd_network)

    p = sub.add_parser("scan", parents=[common], help="coefficient-shape scan over D_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--basis", choices=BASES, default="e")
    p.add_argument("--check", choices=CHECKS + ("all",), default="log-concave")
    p.add_argument("--format", choices=("jsonl", "table"), default="jsonl")
    p.add_argument("--hess", action="append", help="restrict to this h (repeatable)")
    p.add_argument("--expect-all-pass", action="store_true", help="exit 1 if any report fails")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("verify", parents=[common], help="run relation and identity suites")
    p.add_argument("--suite", default="all", help="all or a comma list of suite names")
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=err,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args, out)
    except (UsageError, ValueError, KeyError) as exc:
        err.write(f"chromod {args.command}: error: {exc}\n")
        return 2
    except (EngineError, ArithmeticError, AssertionError, RuntimeError) as exc:
        err.write(f"chromod {args.command}: internal failure: {exc}\n")
        return 1


def main(argv: Optional[Sequence[str]] = None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
