"""Chromatic quasisymmetric functions of indifference graphs, computed by
modular-law reduction, with a brute-force coloring oracle, q-hit numbers and
planar networks for the abelian case, and coefficient-shape scans."""

from .dyck import GuardError, Hess, HessError, enumerate_hess, from_values, from_word, transpose
from .engine import csf_e, csf_e_coeffs, expand
from .kernels import BACKEND
from .oracle import chromatic_poly_q, csf_oracle
from .qpoly import QPoly, QRat, q_factorial, q_int
from .symfunc import SymFunc, convert

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "GuardError", "Hess", "HessError", "QPoly", "QRat", "SymFunc",
    "chromatic_poly_q", "convert", "csf_e", "csf_e_coeffs", "csf_oracle",
    "enumerate_hess", "expand", "from_values", "from_word", "q_factorial",
    "q_int", "transpose", "__version__",
]
