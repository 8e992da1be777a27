"""Classical Hermite basis and the normalized B-spline-like basis of the space.

Each vertex ``v_i`` gets a control interval ``S_i`` around it.  The Bernstein
polynomials of degree ``phi(i) - 1`` on ``S_i``, evaluated (with derivatives) at
``v_i`` and scaled, give the gamma table; feeding a column of that table as
Hermite data at ``v_i`` yields one basis function ``N_{i,alpha}``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from math import comb
from typing import Sequence

import numpy as np

from .bb import BernsteinPiece, Interval, MultiIndex, bernstein_derivative
from .space import RefinedPartition, Spline, hermite_interpolate


class UnsupportedConfigurationError(ValueError):
    """The partition is valid but the requested construction is not defined for it."""


@dataclass(frozen=True)
class ControlInterval:
    i: int
    s1: float
    s2: float

    @property
    def interval(self) -> Interval:
        return Interval(self.s1, self.s2)


@dataclass(frozen=True)
class GammaTable:
    """Rows: derivative order j; columns: alpha = (phi-1, 0), ..., (0, phi-1)."""

    i: int
    entries: np.ndarray

    @property
    def alphas(self) -> list[MultiIndex]:
        return MultiIndex.all_of_degree(self.entries.shape[1] - 1)


def _zero_data(partition: RefinedPartition) -> list[list]:
    return [[0.0] * p for p in partition.phi]


def classical_hermite_basis(partition: RefinedPartition, i: int, j: int) -> Spline:
    """The spline with ``s^(k)(v_l) = 1`` iff ``(l, k) == (i, j)``."""
    if not 0 <= i <= partition.n:
        raise ValueError(f"vertex index {i} out of range")
    if not 0 <= j < partition.phi[i]:
        raise ValueError(f"derivative index {j} out of range for phi({i}) = {partition.phi[i]}")
    data = _zero_data(partition)
    data[i][j] = 1.0
    return hermite_interpolate(partition, data)


def theta(partition: RefinedPartition, i: int):
    p = partition.phi[i]
    return (p - 1) / p


def control_interval(partition: RefinedPartition, i: int) -> ControlInterval:
    if not 0 <= i <= partition.n:
        raise ValueError(f"vertex index {i} out of range")
    if partition.phi[i] < 2:
        raise UnsupportedConfigurationError(
            f"phi({i}) = 1 collapses the control interval to a point")
    t = theta(partition, i)
    v = partition.vertices[i]
    # the sentinels zeta(-1) = v_0 and zeta(n) = v_n give S_{0,1} = v_0, S_{n,2} = v_n
    s1 = v if i == 0 else t * partition.zeta(i - 1) + (1 - t) * v
    s2 = v if i == partition.n else t * partition.zeta(i) + (1 - t) * v
    return ControlInterval(i, s1, s2)


def gamma_table(partition: RefinedPartition, i: int) -> GammaTable:
    ci = control_interval(partition, i)
    p = partition.phi[i]
    t = theta(partition, i)
    S = ci.interval
    v = partition.vertices[i]
    g = np.empty((p, p))
    for j in range(p):
        scale = comb(p, j) / comb(p - 1, j) * t**j
        for col, alpha in enumerate(MultiIndex.all_of_degree(p - 1)):
            g[j, col] = scale * bernstein_derivative(alpha, S, p - 1, v, j)
    return GammaTable(i, g)


def bspline_like(partition: RefinedPartition, i: int, alpha: MultiIndex,
                 gamma: GammaTable | None = None) -> Spline:
    """``N_{i,alpha}``: Hermite data ``gamma^j_{i,alpha}`` at ``v_i``, zero elsewhere."""
    alpha = MultiIndex(*alpha)
    if alpha.degree != partition.phi[i] - 1 or min(alpha) < 0:
        raise ValueError(f"|alpha| must equal phi({i}) - 1 = {partition.phi[i] - 1}")
    gamma = gamma_table(partition, i) if gamma is None else gamma
    data = _zero_data(partition)
    data[i] = list(gamma.entries[:, alpha.a2])
    return hermite_interpolate(partition, data)


@dataclass
class BSplineLikeBasis:
    """Control intervals and gamma tables for every vertex; basis splines on demand.

    The splines ``N_{i,alpha}`` are built on first access and cached.
    """

    partition: RefinedPartition
    control_intervals: list = field(init=False)
    gammas: list = field(init=False)

    def __post_init__(self):
        self.control_intervals = [control_interval(self.partition, i)
                                  for i in range(self.partition.n + 1)]
        self.gammas = [gamma_table(self.partition, i) for i in range(self.partition.n + 1)]
        self._cache: dict = {}

    def indices(self):
        for i, p in enumerate(self.partition.phi):
            for alpha in MultiIndex.all_of_degree(p - 1):
                yield i, alpha

    def __len__(self) -> int:
        return sum(self.partition.phi)

    def function(self, i: int, alpha: MultiIndex) -> Spline:
        key = (i, tuple(alpha))
        if key not in self._cache:
            self._cache[key] = bspline_like(self.partition, i, alpha, self.gammas[i])
        return self._cache[key]

    @cached_property
    def breakpoints(self) -> np.ndarray:
        return np.asarray(self.partition.breakpoints)


def coefficients_to_hermite(basis: BSplineLikeBasis, coeffs: Sequence[Sequence]) -> list[list]:
    """Hermite data of ``sum mu_{i,alpha} N_{i,alpha}``: ``Gamma_i @ mu_i`` per vertex."""
    if len(coeffs) != basis.partition.n + 1:
        raise ValueError("one coefficient row per vertex is required")
    out = []
    for g, mu in zip(basis.gammas, coeffs):
        mu = np.asarray(mu, dtype=float)
        if mu.shape != (g.entries.shape[1],):
            raise ValueError(f"vertex {g.i} needs {g.entries.shape[1]} coefficients")
        out.append(list(g.entries @ mu))
    return out


def spline_from_coefficients(basis: BSplineLikeBasis, coeffs: Sequence[Sequence]) -> Spline:
    return hermite_interpolate(basis.partition, coefficients_to_hermite(basis, coeffs))


def expand(basis: BSplineLikeBasis, coeffs: Sequence[Sequence]) -> Spline:
    """``sum mu_{i,alpha} N_{i,alpha}`` summed ordinate by ordinate over the basis splines."""
    part = basis.partition
    acc = [np.zeros(p.degree + 1) for p in _zero_spline(part).pieces]
    for (i, alpha) in basis.indices():
        mu = coeffs[i][alpha.a2]
        for k, piece in enumerate(basis.function(i, alpha).pieces):
            acc[k] += mu * np.asarray(piece.ordinates)
    pieces = [BernsteinPiece(part.piece_interval(k), tuple(a)) for k, a in enumerate(acc)]
    return Spline(part, tuple(pieces))


def _zero_spline(partition: RefinedPartition) -> Spline:
    return hermite_interpolate(partition, _zero_data(partition))


def partition_of_unity_check(basis: BSplineLikeBasis, samples: int = 1000,
                             skip: tuple | None = None) -> float:
    """``max |sum N_{i,alpha}(x) - 1|`` over ``samples`` uniform points.

    ``skip`` names one ``(i, alpha)`` to leave out of the sum.
    """
    part = basis.partition
    xs = np.linspace(part.vertices[0], part.vertices[-1], samples)
    total = np.zeros_like(xs)
    for i, alpha in basis.indices():
        if skip is not None and (i, tuple(alpha)) == (skip[0], tuple(skip[1])):
            continue
        total += basis.function(i, alpha)(xs)
    return float(np.max(np.abs(total - 1.0)))


def hermite_to_bspline_coeffs(partition: RefinedPartition, i: int, f_row: Sequence,
                              gamma: GammaTable | None = None) -> np.ndarray:
    """Solve ``Gamma_i mu = f_row`` for the B-spline-like coefficients at ``v_i``."""
    gamma = gamma_table(partition, i) if gamma is None else gamma
    f_row = np.asarray(f_row, dtype=float)
    if f_row.shape != (partition.phi[i],):
        raise ValueError(f"vertex {i} needs {partition.phi[i]} data")
    g = gamma.entries
    # invertibility follows from the independence of the Bernstein derivatives
    assert abs(np.linalg.det(g)) > 0, "singular gamma table"
    return np.linalg.solve(g, f_row)


def control_polynomial_T(basis: BSplineLikeBasis, i: int, mu: Sequence) -> BernsteinPiece:
    """Control polynomial at ``v_i``: ordinates ``mu`` on the control interval ``S_i``."""
    if len(mu) != basis.partition.phi[i]:
        raise ValueError(f"vertex {i} needs {basis.partition.phi[i]} coefficients")
    return BernsteinPiece(basis.control_intervals[i].interval, tuple(mu))
