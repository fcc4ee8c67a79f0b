"""Bernoulli numbers with the special values they control.

Everything exact stays exact; approximations carry error bounds and p-adic
results carry their certified precision.
"""
from __future__ import annotations

from .bernoulli import (
    CongruenceReport,
    bernoulli_number,
    bernoulli_polynomial,
    generalized_bernoulli,
    kummer_check,
    voronoi_check,
)
from .characters import (
    DirichletCharacter,
    char_mul,
    characters_mod,
    conductor,
    kronecker_character,
    make_character,
    principal_character,
)
from .errors import ZetalabError
from .exactnum import CyclotomicNumber, Polynomial, TruncatedSeries, series_inverse, series_mul
from .modular import discriminant_series, divisor_sigma, eisenstein_series, j_series
from .mzv import MZVIndex, cyclotomic_mzv, stuffle_check, zeta2_via_iterated_integral
from .padic import (
    PAdic,
    PAdicInterval,
    bernoulli_distribution,
    distribution_additivity_check,
    padic_embed,
    padic_L,
    padic_zeta,
    teichmuller,
)
from .zetavalues import PiPower, class_number, dirichlet_L, polylog, zeta_even, zeta_negative

__version__ = "0.1.0"

__all__ = [
    "CongruenceReport",
    "CyclotomicNumber",
    "DirichletCharacter",
    "MZVIndex",
    "PAdic",
    "PAdicInterval",
    "PiPower",
    "Polynomial",
    "TruncatedSeries",
    "ZetalabError",
    "bernoulli_distribution",
    "bernoulli_number",
    "bernoulli_polynomial",
    "char_mul",
    "characters_mod",
    "class_number",
    "conductor",
    "cyclotomic_mzv",
    "dirichlet_L",
    "discriminant_series",
    "distribution_additivity_check",
    "divisor_sigma",
    "eisenstein_series",
    "generalized_bernoulli",
    "j_series",
    "kronecker_character",
    "kummer_check",
    "make_character",
    "padic_L",
    "padic_embed",
    "padic_zeta",
    "polylog",
    "principal_character",
    "series_inverse",
    "series_mul",
    "stuffle_check",
    "teichmuller",
    "voronoi_check",
    "zeta2_via_iterated_integral",
    "zeta_even",
    "zeta_negative",
]
