"""Exact Legendre symbols of the determinants D_p(b, c) and closed-form predictors for them."""

from .arith import Prime, legendre, legendre_ratio, mod_inv, mod_pow, sieve_primes, sqrt_mod
from .detcore import build_matrix, det_mod_p, dp_det, dp_symbol
from .lucas import LucasPair, LucasParams, lucas_uv, v_zero_indices
from .predict import Prediction, predict
from .quadring import QuadElem, QuadRing, alpha_of, mult_order, theta_of

__all__ = [
    "LucasPair",
    "LucasParams",
    "Prediction",
    "Prime",
    "QuadElem",
    "QuadRing",
    "alpha_of",
    "build_matrix",
    "det_mod_p",
    "dp_det",
    "dp_symbol",
    "legendre",
    "legendre_ratio",
    "lucas_uv",
    "mod_inv",
    "mod_pow",
    "mult_order",
    "predict",
    "sieve_primes",
    "sqrt_mod",
    "theta_of",
    "v_zero_indices",
]
