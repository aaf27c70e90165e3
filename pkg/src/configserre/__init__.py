"""Equivariant Serre characteristics of configuration spaces and of M_{1,n}.

Exact arithmetic throughout: integers, fractions, sparse Laurent polynomials
and symmetric functions in the power-sum basis.
"""

from .configspace import SerreInput, config_serre, phi_polynomials, torsor_serre
from .gl2 import HPoly, h_basis
from .laurent import DivisibilityError, Laurent
from .moduli import (
    closed_form_series,
    level_n_series,
    level_n_table,
    m1n_table,
    nonequi_series,
    quotient_series,
    verify_don,
)
from .motive import MotiveClass, cusp_dim, euler_specialize, hodge_specialize
from .symfun import Exp, Log, SymSeries, p_to_schur

__version__ = "0.1.0"

__all__ = [
    "DivisibilityError",
    "Exp",
    "HPoly",
    "Laurent",
    "Log",
    "MotiveClass",
    "SerreInput",
    "SymSeries",
    "closed_form_series",
    "config_serre",
    "cusp_dim",
    "euler_specialize",
    "h_basis",
    "hodge_specialize",
    "level_n_series",
    "level_n_table",
    "m1n_table",
    "nonequi_series",
    "p_to_schur",
    "phi_polynomials",
    "quotient_series",
    "torsor_serre",
    "verify_don",
]
