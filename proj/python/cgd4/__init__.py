"""Coefficients, checks and moments for the D4^(1) multiple Dirichlet series."""

import json
from fractions import Fraction

from . import _core

__all__ = [
    "z_tilde", "z_w", "slices", "diagonal_slices", "c_g", "quad_symbol", "l_function",
    "moment_cost", "moment_bruteforce", "moment_via_series", "q_n", "asym", "suite_names", "run_suite",
]


def _poly(coeffs):
    return [Fraction(c) for c in coeffs]


def _series(raw):
    return {tuple(k): _poly(v) for k, v in raw}


def z_tilde(order):
    """{(k1, ..., k5): [coefficient of u^0, u^1, ...]} through total degree order."""
    return _series(_core.z_tilde(order))


def z_w(order):
    return _series(_core.z_w(order))


def slices(order, dmax):
    return json.loads(_core.slices_json(order, dmax))


def diagonal_slices(dmax):
    return json.loads(_core.diagonal_slices_json(dmax))


def c_g(exponents):
    """{power of z: [coefficient of u^0, u^1, ...]}"""
    return {k: _poly(v) for k, v in _core.c_g(list(exponents)).items()}


def quad_symbol(q, d, m):
    return _core.quad_symbol(q, list(d), list(m))


def l_function(q, d0):
    return json.loads(_core.l_function_json(q, list(d0)))


moment_cost = _core.moment_cost


def moment_bruteforce(q, D, jobs=1):
    """(a, b) as fractions, the moment being a + b sqrt(q)"""
    a, b = _core.moment_bruteforce(q, D, jobs)
    return Fraction(a), Fraction(b)


def moment_via_series(q, D):
    a, b = _core.moment_via_series(q, D)
    return Fraction(a), Fraction(b)


q_n = _core.q_n


def asym(q, dmin, dmax, terms=2, theta=0.0):
    return json.loads(_core.asym_json(q, dmin, dmax, terms, theta))


def suite_names():
    return list(_core.suite_names())


def run_suite(name, order=0, qs=(5,), cache_dir=""):
    return json.loads(_core.run_suite_json(name, order, list(qs), cache_dir))
