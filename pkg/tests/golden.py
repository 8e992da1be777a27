"""Published point-value weights for uniform partitions with midpoint splits.

Keys are (phi, alpha); values are weights on the nodes
(v_{i-1}, zeta_{i-1}, v_i, zeta_i[, v_{i+1}]).
"""

from fractions import Fraction as F


def _row(den, *nums):
    return tuple(F(k, den) for k in nums)


POINT_VALUE_WEIGHTS = {
    (3, (2, 0)): _row(18, -2, 15, 6, -1),
    (3, (1, 1)): _row(6, 0, -1, 8, -1),
    (3, (0, 2)): _row(18, 2, -9, 18, 7),
    (4, (3, 0)): _row(48, -3, 38, 18, -6, 1),
    (4, (2, 1)): _row(144, -5, 14, 174, -46, 7),
    (4, (1, 2)): _row(144, 7, -46, 174, 14, -5),
    (4, (0, 3)): _row(48, 1, -6, 18, 38, -3),
}
