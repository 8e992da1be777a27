"""Refined partitions, the C1 multi-degree spline space and Hermite interpolation."""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from math import comb, factorial
from typing import Sequence

import numpy as np

from .bb import BernsteinPiece, Interval, c1_join_ordinate, subdivide


@dataclass(frozen=True)
class RefinedPartition:
    """Vertices ``v_0 < ... < v_n`` with one split point inside each sub-interval.

    ``phi[i]`` is the number of Hermite data (value plus derivatives) imposed at
    ``v_i``; the spline has degree ``phi[i]`` on both half-intervals touching ``v_i``.
    """

    vertices: tuple
    splits: tuple
    phi: tuple

    def __post_init__(self):
        for name in ("vertices", "splits", "phi"):
            object.__setattr__(self, name, tuple(getattr(self, name)))
        n = len(self.vertices) - 1
        if n < 1:
            raise ValueError("a partition needs at least two vertices")
        if len(self.splits) != n:
            raise ValueError(f"expected {n} split points, got {len(self.splits)}")
        if len(self.phi) != n + 1:
            raise ValueError(f"phi has {len(self.phi)} entries for {n + 1} vertices")
        if any(int(p) != p or p < 1 for p in self.phi):
            raise ValueError("every phi(i) must be a positive integer")
        for i in range(n):
            if not self.vertices[i] < self.splits[i] < self.vertices[i + 1]:
                raise ValueError(f"split {i} does not lie strictly inside its sub-interval")

    @property
    def n(self) -> int:
        return len(self.vertices) - 1

    def zeta(self, i: int):
        """Split point ``i`` with the sentinels ``zeta(-1) = v_0`` and ``zeta(n) = v_n``."""
        if i == -1:
            return self.vertices[0]
        if i == self.n:
            return self.vertices[-1]
        return self.splits[i]

    @property
    def breakpoints(self) -> tuple:
        """``v_0, zeta_0, v_1, ..., zeta_{n-1}, v_n``."""
        out = [self.vertices[0]]
        for z, v in zip(self.splits, self.vertices[1:]):
            out += [z, v]
        return tuple(out)

    def piece_interval(self, k: int) -> Interval:
        bp = self.breakpoints
        return Interval(bp[k], bp[k + 1])

    def piece_degree(self, k: int) -> int:
        # piece 2i is [v_i, zeta_i] (degree phi(i)); piece 2i+1 is [zeta_i, v_{i+1}]
        return self.phi[(k + 1) // 2]

    @property
    def interval(self) -> Interval:
        return Interval(self.vertices[0], self.vertices[-1])


def uniform_refined_partition(interval: Interval, n: int, phi: Sequence[int]) -> RefinedPartition:
    """Uniform vertices ``a + i h`` with midpoint splits ``a + (i + 1/2) h``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if len(phi) != n + 1:
        raise ValueError(f"phi has {len(phi)} entries, expected {n + 1}")
    a, b = interval.a, interval.b
    h = (b - a) / n
    vertices = [a + i * h for i in range(n)] + [b]
    splits = [a + (i + 0.5) * h for i in range(n)]
    return RefinedPartition(tuple(vertices), tuple(splits), tuple(phi))


def alternating_phi(n: int, pattern: Sequence[int] = (3, 4)) -> tuple:
    """``phi(i) = pattern[i % len(pattern)]``; the default gives phi(2i)=3, phi(2i+1)=4."""
    return tuple(pattern[i % len(pattern)] for i in range(n + 1))


def dimension(partition: RefinedPartition) -> int:
    return sum(partition.phi)


@dataclass(frozen=True)
class Spline:
    """Piecewise polynomial on a refined partition, one Bernstein piece per half-interval.

    Smoothness is not enforced here: the same container also holds elements of
    the broken space (used as quasi-interpolation input). :func:`smoothness_report`
    checks it.
    """

    partition: RefinedPartition
    pieces: tuple

    def __post_init__(self):
        object.__setattr__(self, "pieces", tuple(self.pieces))
        if len(self.pieces) != 2 * self.partition.n:
            raise ValueError(f"expected {2 * self.partition.n} pieces, got {len(self.pieces)}")

    def piece_index(self, x) -> int:
        bp = self.partition.breakpoints
        if not bp[0] <= x <= bp[-1]:
            raise ValueError(f"x = {x} outside [{bp[0]}, {bp[-1]}]")
        # left piece wins at a shared breakpoint
        return max(0, bisect_left(bp, x) - 1)

    def __call__(self, x, j: int = 0):
        if np.ndim(x) == 0:
            return evaluate(self, x, j)
        return np.array([evaluate(self, xi, j) for xi in np.asarray(x, dtype=float)])

    def left_piece(self, i: int) -> BernsteinPiece:
        """Piece on ``[zeta_{i-1}, v_i]``."""
        return self.pieces[2 * i - 1]

    def right_piece(self, i: int) -> BernsteinPiece:
        """Piece on ``[v_i, zeta_i]``."""
        return self.pieces[2 * i]


def evaluate(s: Spline, x, j: int = 0):
    """``j``-th derivative of ``s`` at ``x``; the left piece is used at shared knots."""
    if j < 0:
        raise ValueError("derivative order must be nonnegative")
    return s.pieces[s.piece_index(x)].eval_derivative(x, j)


def _left_end_ordinates(f_row: Sequence, d: int, h) -> list:
    # p^(j)(a) = d!/(d-j)! h^-j sum_k (-1)^(j-k) C(j,k) c_k, solved for c_j
    c = []
    for j, fj in enumerate(f_row):
        acc = fj * h**j * factorial(d - j) / factorial(d)
        acc -= sum((-1) ** (j - k) * comb(j, k) * c[k] for k in range(j))
        c.append(acc)
    return c


def _right_end_ordinates(f_row: Sequence, d: int, h) -> list:
    # p^(j)(b) = d!/(d-j)! h^-j sum_k (-1)^k C(j,k) c_{d-k}; returns c_d, c_{d-1}, ...
    c = []
    for j, fj in enumerate(f_row):
        acc = fj * h**j * factorial(d - j) / factorial(d)
        acc -= sum((-1) ** k * comb(j, k) * c[k] for k in range(j))
        c.append(acc * (-1) ** j)
    return c


def check_hermite_data(partition: RefinedPartition, data) -> list:
    rows = [list(r) for r in data]
    if len(rows) != partition.n + 1:
        raise ValueError(f"need data rows for {partition.n + 1} vertices, got {len(rows)}")
    for i, (row, p) in enumerate(zip(rows, partition.phi)):
        if len(row) != p:
            raise ValueError(f"vertex {i} needs {p} data, got {len(row)}")
    return rows


def hermite_interpolate(partition: RefinedPartition, data) -> Spline:
    """The unique spline with ``s^(j)(v_i) = data[i][j]`` for ``j < phi(i)``.

    Works one sub-interval at a time: the ordinates next to each vertex come
    from the endpoint-derivative formulas, the one at the split from the C1 join.
    """
    rows = check_hermite_data(partition, data)
    pieces = []
    for i in range(partition.n):
        vi, zi, vj = partition.vertices[i], partition.splits[i], partition.vertices[i + 1]
        d1, d2 = partition.phi[i], partition.phi[i + 1]
        left = _left_end_ordinates(rows[i], d1, zi - vi)
        right = _right_end_ordinates(rows[i + 1], d2, vj - zi)[::-1]
        join = c1_join_ordinate(left[-1], right[0], d1, d2, vi, zi, vj)
        pieces.append(BernsteinPiece(Interval(vi, zi), tuple(left) + (join,)))
        pieces.append(BernsteinPiece(Interval(zi, vj), (join,) + tuple(right)))
    return Spline(partition, tuple(pieces))


def hermite_data_of(s: Spline) -> list:
    """Values and derivatives of ``s`` at the vertices, read from the adjacent pieces."""
    part = s.partition
    out = []
    for i in range(part.n + 1):
        piece = s.pieces[2 * i] if i < part.n else s.pieces[-1]
        out.append([piece.eval_derivative(part.vertices[i], j) for j in range(part.phi[i])])
    return out


@dataclass(frozen=True)
class SmoothnessReport:
    vertex_orders: tuple  # interior vertices v_1..v_{n-1}
    split_orders: tuple   # split points zeta_0..zeta_{n-1}


def _matched_order(p: BernsteinPiece, q: BernsteinPiece, x, rtol: float) -> int:
    top = max(p.degree, q.degree)
    order = -1
    for j in range(top + 1):
        a, b = p.eval_derivative(x, j), q.eval_derivative(x, j)
        scale = max(1.0, abs(a), abs(b))
        if abs(a - b) > rtol * scale:
            break
        order = j
    return order


def smoothness_report(s: Spline, rtol: float = 1e-8) -> SmoothnessReport:
    """Largest derivative order with matching one-sided values at each breakpoint.

    Derivative order ``j`` is compared relative to ``max(1, |left|, |right|)``;
    -1 means the values themselves differ.
    """
    part = s.partition
    verts = tuple(
        _matched_order(s.pieces[2 * i - 1], s.pieces[2 * i], part.vertices[i], rtol)
        for i in range(1, part.n)
    )
    splits = tuple(
        _matched_order(s.pieces[2 * i], s.pieces[2 * i + 1], part.splits[i], rtol)
        for i in range(part.n)
    )
    return SmoothnessReport(verts, splits)


def restrict_global(poly_piece: BernsteinPiece, partition: RefinedPartition) -> Spline:
    """Cut one polynomial into the pieces of ``partition`` (degree kept per piece)."""
    pieces = []
    for k in range(2 * partition.n):
        sub = subdivide(poly_piece, partition.piece_interval(k))
        pieces.append(sub.elevate(partition.piece_degree(k)))
    return Spline(partition, tuple(pieces))
