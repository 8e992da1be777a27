"""Bernstein-Bezier kernel on a real interval.

Everything here is plain Python arithmetic on tuples so that the same code runs
on floats and on :class:`fractions.Fraction` (used for exact golden weights).
Ordinates are stored left to right: entry ``k`` is the ordinate ``c_(d-k, k)``
attached to the domain point ``((d-k) a + k b) / d``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial
from typing import NamedTuple, Sequence


class MultiIndex(NamedTuple):
    a1: int
    a2: int

    @property
    def degree(self) -> int:
        return self.a1 + self.a2

    @classmethod
    def all_of_degree(cls, d: int) -> list["MultiIndex"]:
        """Multi-indices of total degree ``d`` in storage order (d,0), ..., (0,d)."""
        return [cls(d - k, k) for k in range(d + 1)]


@dataclass(frozen=True)
class Interval:
    a: float
    b: float

    def __post_init__(self):
        if not self.a < self.b:
            raise ValueError(f"degenerate interval [{self.a}, {self.b}]")

    @property
    def length(self):
        return self.b - self.a

    def __contains__(self, x) -> bool:
        return self.a <= x <= self.b


@dataclass(frozen=True)
class BernsteinPiece:
    """A polynomial on ``interval`` given by its B-ordinates."""

    interval: Interval
    ordinates: tuple

    def __post_init__(self):
        object.__setattr__(self, "ordinates", tuple(self.ordinates))
        if len(self.ordinates) == 0:
            raise ValueError("a Bernstein piece needs at least one ordinate")

    @property
    def degree(self) -> int:
        return len(self.ordinates) - 1

    def __call__(self, v):
        return blossom(self, [v] * self.degree)

    def derivative(self, j: int = 1) -> "BernsteinPiece":
        """The ``j``-th derivative, as a piece of degree ``max(d - j, 0)``."""
        if j < 0:
            raise ValueError("derivative order must be nonnegative")
        d = self.degree
        if j > d:
            return BernsteinPiece(self.interval, (0 * self.ordinates[0],))
        c = list(self.ordinates)
        for _ in range(j):
            c = [c[k + 1] - c[k] for k in range(len(c) - 1)]
        scale = factorial(d) // factorial(d - j)
        h = self.interval.length
        return BernsteinPiece(self.interval, tuple(scale * ck / h**j for ck in c))

    def eval_derivative(self, v, j: int):
        if j == 0:
            return self(v)
        return self.derivative(j)(v)

    def elevate(self, degree: int) -> "BernsteinPiece":
        """Degree-raised representation of the same polynomial."""
        d = self.degree
        if degree < d:
            raise ValueError("cannot lower the degree by elevation")
        c = list(self.ordinates)
        for m in range(d, degree):
            c = [c[0]] + [(k * c[k - 1] + (m + 1 - k) * c[k]) / (m + 1)
                          for k in range(1, m + 1)] + [c[m]]
        return BernsteinPiece(self.interval, tuple(c))


def _check_degree(alpha: MultiIndex, d: int) -> None:
    if alpha.a1 < 0 or alpha.a2 < 0:
        raise ValueError(f"negative multi-index {tuple(alpha)}")
    if alpha.a1 + alpha.a2 != d:
        raise ValueError(f"|alpha| = {alpha.a1 + alpha.a2} does not match degree {d}")


def bernstein_eval(alpha: MultiIndex, interval: Interval, d: int, v):
    """Value of the Bernstein basis polynomial of index ``alpha`` on ``interval``."""
    alpha = MultiIndex(*alpha)
    _check_degree(alpha, d)
    a, b = interval.a, interval.b
    return comb(d, alpha.a2) * (b - v) ** alpha.a1 * (v - a) ** alpha.a2 / (b - a) ** d


def bernstein_derivative(alpha: MultiIndex, interval: Interval, d: int, v, j: int):
    """``j``-th derivative of a Bernstein basis polynomial; exactly 0 for ``j > d``."""
    alpha = MultiIndex(*alpha)
    _check_degree(alpha, d)
    if j < 0:
        raise ValueError("derivative order must be nonnegative")
    if j > d:
        return 0.0
    unit = [0] * (d + 1)
    unit[alpha.a2] = 1
    return BernsteinPiece(interval, unit).eval_derivative(v, j)


def blossom(p: BernsteinPiece, args: Sequence):
    """Polar form of ``p`` at ``args`` (one argument per de Casteljau level).

    Arguments may lie outside ``p.interval``; the barycentric weights are then
    simply negative or larger than one.
    """
    d = p.degree
    if len(args) != d:
        raise ValueError(f"blossom of a degree-{d} piece takes {d} arguments, got {len(args)}")
    a, h = p.interval.a, p.interval.length
    c = list(p.ordinates)
    for r, u in enumerate(args):
        t = (u - a) / h
        s = 1 - t
        c = [s * c[k] + t * c[k + 1] for k in range(d - r)]
    return c[0]


def subdivide(p: BernsteinPiece, sub: Interval) -> BernsteinPiece:
    """Representation of the same polynomial on ``sub`` (which may leave ``p.interval``)."""
    d = p.degree
    return BernsteinPiece(
        sub, tuple(blossom(p, [sub.a] * (d - k) + [sub.b] * k) for k in range(d + 1))
    )


def partial_blossom(p: BernsteinPiece, fixed_args: Sequence, d2: int,
                    target: Interval | None = None) -> BernsteinPiece:
    """Degree-``d2`` piece ``q`` with ``B[q](y...) = B[p](fixed_args, y...)``.

    The ordinates of ``q`` are taken on ``target`` (defaults to ``p.interval``).
    """
    d = p.degree
    if not 0 <= d2 < d:
        raise ValueError(f"need 0 <= d2 < {d}, got d2 = {d2}")
    if len(fixed_args) != d - d2:
        raise ValueError(f"expected {d - d2} fixed arguments, got {len(fixed_args)}")
    target = p.interval if target is None else target
    fixed = list(fixed_args)
    return BernsteinPiece(
        target,
        tuple(blossom(p, fixed + [target.a] * (d2 - k) + [target.b] * k) for k in range(d2 + 1)),
    )


def control_polynomial(p: BernsteinPiece, v1, d2: int, theta,
                       target: Interval | None = None) -> BernsteinPiece:
    """``q(v) = B[p](v1[d1-d2], (v/theta + (1 - 1/theta) v1)[d2])`` as a piece on ``target``.

    With ``theta = d2/d1`` the value and first derivative of ``q`` and ``p`` agree at ``v1``.
    """
    d1 = p.degree
    if theta == 0:
        raise ValueError("theta must be nonzero")
    if not 0 < d2 < d1:
        raise ValueError(f"need 0 < d2 < {d1}, got d2 = {d2}")
    target = p.interval if target is None else target

    def stretch(v):
        return v / theta + (1 - 1 / theta) * v1

    head = [v1] * (d1 - d2)
    ua, ub = stretch(target.a), stretch(target.b)
    return BernsteinPiece(
        target, tuple(blossom(p, head + [ua] * (d2 - k) + [ub] * k) for k in range(d2 + 1))
    )


def c1_join_ordinate(c_last_inner, c_hat_inner, d1: int, d2: int, vi, zeta, vip1):
    """Shared ordinate at ``zeta`` making a degree-d1 / degree-d2 join C1.

    ``c_last_inner`` is the left piece's ordinate next to ``zeta`` and
    ``c_hat_inner`` the right piece's.
    """
    if not vi < zeta < vip1:
        raise ValueError(f"split point {zeta} not inside ({vi}, {vip1})")
    if d1 < 1 or d2 < 1:
        raise ValueError("both degrees must be at least 1")
    wl = d1 / (zeta - vi)
    wr = d2 / (vip1 - zeta)
    return (wr * c_hat_inner + wl * c_last_inner) / (wl + wr)


def from_monomial(coeffs: Sequence, interval: Interval, degree: int | None = None) -> BernsteinPiece:
    """Bernstein piece of ``sum_m coeffs[m] x**m`` on ``interval``.

    Uses the blossom of ``x**m`` at degree ``d``, the elementary symmetric
    polynomial ``e_m`` divided by ``C(d, m)``. Exact on Fractions.
    """
    d = len(coeffs) - 1 if degree is None else degree
    if d < len(coeffs) - 1:
        raise ValueError("degree too small for the given coefficients")
    a, b = interval.a, interval.b
    ords = []
    for k in range(d + 1):
        args = [a] * (d - k) + [b] * k
        e = _elementary_symmetric(args, len(coeffs) - 1)
        ords.append(sum(cm * e[m] / comb(d, m) for m, cm in enumerate(coeffs)))
    return BernsteinPiece(interval, tuple(ords))


def _elementary_symmetric(values: Sequence, top: int) -> list:
    e = [1] + [0] * top
    for x in values:
        for m in range(top, 0, -1):
            e[m] = e[m] + e[m - 1] * x
    return e
