"""Exact higher-order Changhee, Daehee, Euler and Bernoulli families,
a truncated power-series oracle, and an identity verifier."""
from changhee.algebra import Mat, Polynomial, mat_mul, parse_polynomial, poly_binom, poly_eval
from changhee.kernels import BACKEND

__version__ = "0.1.0"

__all__ = ["BACKEND", "Mat", "Polynomial", "mat_mul", "parse_polynomial", "poly_binom", "poly_eval"]
