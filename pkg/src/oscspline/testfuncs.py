"""Test functions on [0, 1] with closed-form derivatives up to order 3.

Derivatives are obtained symbolically (sympy) once at import and compiled to
plain ``math`` expressions.
"""

from __future__ import annotations

import sympy as sp

from .quasi import CapabilityError, FunctionOracle

MAX_ORDER = 3

_x = sp.Symbol("x", real=True)

_EXPRESSIONS = {
    "f1": (sp.Rational(3, 4) * sp.exp(-2 * (9 * _x - 2) ** 2)
           - sp.Rational(1, 5) * sp.exp(-(9 * _x - 7) ** 2 - (9 * _x - 4) ** 2)
           + sp.Rational(1, 2) * sp.exp(-(9 * _x - 7) ** 2 - sp.Rational(1, 4) * (9 * _x - 3) ** 2)
           + sp.Rational(3, 4) * sp.exp(sp.Rational(1, 10) * (-9 * _x - 1)
                                        - sp.Rational(1, 49) * (9 * _x + 1) ** 2)),
    "f2": sp.Rational(1, 2) * _x * sp.cos(4 * (_x**2 + _x - 1)) ** 4,
    "f3": _x**4 * sp.exp(-3 * _x**2) + 1 / (_x**6 + 1),
    "g1": sp.sin(_x),
    "g2": -sp.Rational(1, 2) * (sp.exp(_x**3 / 2) - 1) * sp.cos(3 * sp.pi * _x),
    "g3": sp.exp(-3 * _x) * sp.sin(sp.pi / 2 * _x),
}

FUNCTION_IDS = tuple(_EXPRESSIONS)


def _compile(expr):
    derivs = [expr]
    for _ in range(MAX_ORDER):
        derivs.append(sp.diff(derivs[-1], _x))
    return [sp.lambdify(_x, d, modules="math") for d in derivs]


_COMPILED = {name: _compile(expr) for name, expr in _EXPRESSIONS.items()}


def test_function(fid: str, x: float, j: int = 0) -> float:
    """``j``-th derivative of the named test function at ``x``."""
    try:
        table = _COMPILED[fid]
    except KeyError:
        raise ValueError(f"unknown test function {fid!r}; choose from {', '.join(FUNCTION_IDS)}")
    if j < 0:
        raise ValueError("derivative order must be nonnegative")
    if j > MAX_ORDER:
        raise CapabilityError(f"{fid}: derivatives above order {MAX_ORDER} are not provided")
    return float(table[j](x))


test_function.__test__ = False  # keep pytest from collecting it


def oracle(fid: str) -> FunctionOracle:
    if fid not in _COMPILED:
        raise ValueError(f"unknown test function {fid!r}; choose from {', '.join(FUNCTION_IDS)}")
    table = _COMPILED[fid]
    return FunctionOracle(lambda x: float(table[0](x)),
                          lambda x, j: test_function(fid, x, j), MAX_ORDER)


def expression(fid: str):
    return _EXPRESSIONS[fid]
