"""Exact symbolic engine for the positive part of quantum affine sl_{n+1}:
PBW and crystal-type bases, the Drinfeld-style bilinear form, and mechanical
verification of the defining identities at bounded degree.
"""

from ._speed import IMPLEMENTATION
from .cartan import AffineCartanDatum, AffineRoot, Weight, build_datum, pairing, pieri_shapes
from .config import Config, from_profile
from .freealg import FreeElement, TensorElement, coproduct_r, divided_power, ir, r_i
from .form import (dim_oracle, dim_uplus, equals_in_uplus, in_lattice, inner,
                   is_zero_in_uplus)
from .rootvec import RootVectorTable
from .scalar import (LaurentPoly, PowerSeries, RationalFunction, in_A,
                     limit_at_infinity, q_binom, q_fact, q_int, series_exp,
                     series_log)
from .weyl import RootWindow, beta_sequence, t_two_rho_word

__version__ = "0.1.0"

__all__ = [
    "AffineCartanDatum", "AffineRoot", "Weight", "build_datum", "pairing",
    "pieri_shapes", "Config", "from_profile", "FreeElement", "TensorElement",
    "coproduct_r", "divided_power", "ir", "r_i", "dim_oracle", "dim_uplus",
    "equals_in_uplus", "in_lattice", "inner", "is_zero_in_uplus",
    "RootVectorTable", "LaurentPoly", "PowerSeries", "RationalFunction",
    "in_A", "limit_at_infinity", "q_binom", "q_fact", "q_int", "series_exp",
    "series_log", "RootWindow", "beta_sequence", "t_two_rho_word",
    "IMPLEMENTATION", "__version__",
]
