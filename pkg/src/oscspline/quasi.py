"""Quasi-interpolation in the B-spline-like basis.

Every operator has the form ``Q f = sum nu_{i,alpha}(f) N_{i,alpha}`` where
``nu_{i,alpha}`` approximates the blossom of ``f`` (as a degree ``phi(i)``
polynomial) at ``(v_i, zeta_{i-1}[alpha_1], zeta_i[alpha_2])``.  The three
families differ in how they get at that blossom:

* ``differential``  -- Taylor expansion of the blossom around ``v_i``;
* ``point_value``   -- blossom of a local Lagrange interpolant;
* ``polarization``  -- the discrete polarization identity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb, factorial
from typing import Callable, Sequence

from .bb import BernsteinPiece, Interval, MultiIndex, blossom, from_monomial
from .basis import BSplineLikeBasis, spline_from_coefficients
from .space import RefinedPartition, Spline

KINDS = ("differential", "point_value", "polarization")
MAX_POLARIZATION_DEGREE = 20


class CapabilityError(RuntimeError):
    """The function oracle cannot provide what the functional needs."""


@dataclass(frozen=True)
class FunctionOracle:
    """A function together with (optionally) its derivatives.

    ``derivative(x, j)`` returns the ``j``-th derivative; it may be omitted, in
    which case only the point-value and polarization functionals can be used.
    """

    value: Callable
    derivative: Callable | None = None
    max_order: int = 0

    def eval(self, x):
        return self.value(x)

    def deriv(self, x, j: int):
        if j == 0:
            return self.value(x)
        if self.derivative is None or j > self.max_order:
            raise CapabilityError(f"derivative of order {j} is not available")
        return self.derivative(x, j)


def as_oracle(f) -> FunctionOracle:
    return f if isinstance(f, FunctionOracle) else FunctionOracle(f)


def blossom_arguments(partition: RefinedPartition, i: int, alpha: MultiIndex) -> list:
    """``(v_i, zeta_{i-1}[alpha_1], zeta_i[alpha_2])`` with the boundary sentinels."""
    alpha = MultiIndex(*alpha)
    if alpha.degree != partition.phi[i] - 1 or min(alpha) < 0:
        raise ValueError(f"|alpha| must equal phi({i}) - 1 = {partition.phi[i] - 1}")
    return ([partition.vertices[i]] + [partition.zeta(i - 1)] * alpha.a1
            + [partition.zeta(i)] * alpha.a2)


def carrier_piece(p: Spline, i: int) -> BernsteinPiece:
    """Piece of ``p`` whose blossom defines the coefficients at ``v_i``.

    ``p|[v_i, zeta_i]``; at the last vertex there is no such piece and the one on
    ``[zeta_{n-1}, v_n]`` is used instead.
    """
    return p.pieces[2 * i] if i < p.partition.n else p.pieces[-1]


def qi_coefficient_blossom(partition: RefinedPartition, i: int, alpha: MultiIndex,
                           p: BernsteinPiece):
    if p.degree != partition.phi[i]:
        raise ValueError(f"carrier piece has degree {p.degree}, expected phi({i}) = {partition.phi[i]}")
    return blossom(p, blossom_arguments(partition, i, alpha))


def differential_weights(partition: RefinedPartition, i: int, alpha: MultiIndex) -> list:
    """Weights ``w_m`` with ``nu(f) = sum_m w_m f^(m)(v_i)``, ``m = 0..phi(i)-1``.

    ``w_m = (d-m)!/d! * e_m`` where ``e_m`` is the elementary symmetric
    polynomial of the argument offsets ``zeta_{i-1} - v_i`` (alpha_1 times) and
    ``zeta_i - v_i`` (alpha_2 times).  The order-``d`` term vanishes because one
    argument equals ``v_i``.
    """
    alpha = MultiIndex(*alpha)
    d = partition.phi[i]
    blossom_arguments(partition, i, alpha)
    v = partition.vertices[i]
    dl, dr = partition.zeta(i - 1) - v, partition.zeta(i) - v
    weights = []
    for m in range(d):
        e = sum(comb(alpha.a1, a) * comb(alpha.a2, m - a) * dl**a * dr ** (m - a)
                for a in range(max(0, m - alpha.a2), min(m, alpha.a1) + 1))
        weights.append(factorial(d - m) / factorial(d) * e)
    return weights


def differential_functional(partition: RefinedPartition, i: int, alpha: MultiIndex, f) -> float:
    f = as_oracle(f)
    v = partition.vertices[i]
    return sum(w * f.deriv(v, m) for m, w in enumerate(differential_weights(partition, i, alpha)))


def point_value_nodes(partition: RefinedPartition, i: int) -> list:
    """``phi(i) + 1`` consecutive breakpoints around ``v_i``.

    The window starts two breakpoints left of ``v_i`` (``v_{i-1}, zeta_{i-1}, v_i,
    ...``) and is shifted inward where it would leave the domain.
    """
    bp = partition.breakpoints
    width = partition.phi[i] + 1
    if width > len(bp):
        raise ValueError(f"phi({i}) = {partition.phi[i]} needs {width} nodes, "
                         f"the partition has only {len(bp)} breakpoints")
    start = min(max(2 * i - 2, 0), len(bp) - width)
    return list(bp[start:start + width])


def _lagrange_monomial(nodes: Sequence, k: int) -> list:
    coeffs = [1]
    denom = 1
    for m, t in enumerate(nodes):
        if m == k:
            continue
        # multiply by (x - t)
        coeffs = [-t * coeffs[0]] + [coeffs[r - 1] - t * coeffs[r] for r in range(1, len(coeffs))] + [coeffs[-1]]
        denom = denom * (nodes[k] - t)
    return [c / denom for c in coeffs]


def point_value_weights(nodes: Sequence, args: Sequence) -> list:
    """Blossom of each Lagrange polynomial on ``nodes`` at ``args``.

    Exact when nodes and args are Fractions.
    """
    if len(set(nodes)) != len(nodes):
        raise ValueError("interpolation nodes must be distinct")
    d = len(nodes) - 1
    if len(args) != d:
        raise ValueError(f"{len(nodes)} nodes give degree {d}, but {len(args)} blossom arguments")
    # the blossom commutes with affine maps; work in coordinates where the nodes span [0, 1]
    lo, width = min(nodes), max(nodes) - min(nodes)
    nodes = [(t - lo) / width for t in nodes]
    args = [(u - lo) / width for u in args]
    ref = Interval(0 * lo, 0 * lo + 1)
    return [blossom(from_monomial(_lagrange_monomial(nodes, k), ref, d), args)
            for k in range(len(nodes))]


def point_value_table(partition: RefinedPartition, i: int, alpha: MultiIndex) -> tuple[list, list]:
    nodes = point_value_nodes(partition, i)
    return nodes, point_value_weights(nodes, blossom_arguments(partition, i, alpha))


def point_value_functional(partition: RefinedPartition, i: int, alpha: MultiIndex, f) -> float:
    f = as_oracle(f)
    nodes, weights = point_value_table(partition, i, alpha)
    return sum(w * f.eval(t) for t, w in zip(nodes, weights))


def polarization_table(args: Sequence) -> tuple[list, list]:
    """Nodes and weights of ``M[f](args)``: subset averages with ``(-1)^(d-k) k^d / d!``.

    Subsets run over argument positions; equal nodes are merged.
    """
    d = len(args)
    if d > MAX_POLARIZATION_DEGREE:
        raise ValueError(f"polarization of degree {d} refused (2^{d} terms)")
    merged: dict = {}
    for k in range(1, d + 1):
        w = (-1) ** (d - k) * k**d / factorial(d)
        for subset in combinations(args, k):
            t = sum(subset) / k
            merged[t] = merged.get(t, 0) + w
    return list(merged), list(merged.values())


def polarization(f, args: Sequence) -> float:
    f = as_oracle(f)
    nodes, weights = polarization_table(args)
    return sum(w * f.eval(t) for t, w in zip(nodes, weights))


def polarization_functional(partition: RefinedPartition, i: int, alpha: MultiIndex, f) -> float:
    return polarization(f, blossom_arguments(partition, i, alpha))


_FUNCTIONALS = {
    "differential": differential_functional,
    "point_value": point_value_functional,
    "polarization": polarization_functional,
}


def normalize_kind(kind: str) -> str:
    k = kind.replace("-", "_")
    if k not in _FUNCTIONALS:
        raise ValueError(f"unknown operator kind {kind!r}; choose from {', '.join(KINDS)}")
    return k


def qi_coefficients(partition: RefinedPartition, kind: str, f) -> list[list]:
    """``nu_{i,alpha}(f)`` for every vertex, alphas in storage order."""
    functional = _FUNCTIONALS[normalize_kind(kind)]
    return [[functional(partition, i, alpha, f) for alpha in MultiIndex.all_of_degree(p - 1)]
            for i, p in enumerate(partition.phi)]


def quasi_interpolate(partition: RefinedPartition, kind: str, f,
                      basis: BSplineLikeBasis | None = None) -> Spline:
    """``sum_i sum_alpha nu_{i,alpha}(f) N_{i,alpha}``.

    Rather than summing the basis splines, the coefficients are mapped to
    Hermite data through the gamma tables and interpolated once; both give the
    same spline.
    """
    if basis is None:
        basis = BSplineLikeBasis(partition)
    elif basis.partition != partition:
        raise ValueError("basis was built on a different partition")
    return spline_from_coefficients(basis, qi_coefficients(partition, kind, f))


def evaluation_points(partition: RefinedPartition, kind: str) -> list:
    """Distinct points where ``kind`` samples ``f`` (empty for differential)."""
    kind = normalize_kind(kind)
    pts: set = set()
    for i, p in enumerate(partition.phi):
        for alpha in MultiIndex.all_of_degree(p - 1):
            if kind == "point_value":
                pts.update(point_value_nodes(partition, i))
            elif kind == "polarization":
                pts.update(polarization_table(_exact_args(partition, i, alpha))[0])
    return sorted(pts)


def _exact_args(partition: RefinedPartition, i: int, alpha: MultiIndex) -> list:
    # Fractions keep subset averages that coincide mathematically from splitting in floats
    return [Fraction(x).limit_denominator(10**12) for x in blossom_arguments(partition, i, alpha)]
