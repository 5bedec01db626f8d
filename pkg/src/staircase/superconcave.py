"""Super-concave partitions: non-negative second differences.

A super-concave partition is a unique non-negative combination of the
staircases delta_i = (i, i-1, ..., 1), the multiplicities being its second
differences.  That gives the bijection with partitions into triangular numbers
T_i = i(i+1)/2 and the coin-change count below.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from staircase.partition import Partition, diff2


def triangular(i: int) -> int:
    return i * (i + 1) // 2


def triangulars_upto(n: int, r: int | None = None) -> list[int]:
    out = []
    i = 1
    while triangular(i) <= n and (r is None or i <= r):
        out.append(triangular(i))
        i += 1
    return out


def is_superconcave(lam: Partition) -> bool:
    return all(c >= 0 for c in diff2(lam))


def triples_superconcave(lam: Partition, limit: int | None = None) -> bool:
    """Check lambda_i(j-k) + lambda_j(k-i) + lambda_k(i-j) <= 0 for all i<j<k<=limit.

    ``limit`` defaults to numparts + 2.
    """
    limit = lam.numparts + 2 if limit is None else limit
    lp = [0] + [lam.part(k) for k in range(1, limit + 1)]
    return all(
        lp[i] * (j - k) + lp[j] * (k - i) + lp[k] * (i - j) <= 0
        for i, j, k in combinations(range(1, limit + 1), 3)
    )


@dataclass(frozen=True)
class TriangularDecomposition:
    """Multiplicities c_1, c_2, ... of the staircases delta_1, delta_2, ..."""

    multiplicities: tuple[int, ...] = ()

    def __post_init__(self):
        mult = tuple(int(c) for c in self.multiplicities)
        if any(c < 0 for c in mult):
            raise ValueError(f"negative multiplicity in {mult}")
        while mult and mult[-1] == 0:
            mult = mult[:-1]
        object.__setattr__(self, "multiplicities", mult)

    @property
    def weight(self) -> int:
        return sum(c * triangular(i) for i, c in enumerate(self.multiplicities, start=1))

    def triangular_parts(self) -> list[int]:
        """The partition into triangular numbers, largest part first."""
        out = []
        for i in range(len(self.multiplicities), 0, -1):
            out.extend([triangular(i)] * self.multiplicities[i - 1])
        return out

    def __str__(self) -> str:
        return ",".join(str(c) for c in self.multiplicities)

    @classmethod
    def parse(cls, text: str) -> TriangularDecomposition:
        text = text.strip()
        return cls(tuple(int(c) for c in text.split(","))) if text else cls()


def decompose(lam: Partition) -> TriangularDecomposition:
    coeffs = diff2(lam)[: lam.numparts]
    if any(c < 0 for c in coeffs):
        raise ValueError(f"{lam} is not super-concave")
    return TriangularDecomposition(coeffs)


def recompose(dec: TriangularDecomposition) -> Partition:
    mult = dec.multiplicities
    r = len(mult)
    # delta_i contributes i-k+1 to part k for k <= i
    return Partition(tuple(sum(mult[i - 1] * (i - k + 1) for i in range(k, r + 1)) for k in range(1, r + 1)))


def count_superconcave(n: int, r: int | None = None) -> int:
    return superconcave_counts(n, r)[n]


def superconcave_counts(n: int, r: int | None = None) -> list[int]:
    """[p_sc(0, r), ..., p_sc(n, r)] by the coin-change recurrence over triangular numbers."""
    if n < 0:
        raise ValueError("n must be >= 0")
    dp = np.zeros(n + 1, dtype=object)
    dp[:] = 0
    dp[0] = 1
    for coin in triangulars_upto(n, r):
        # blockwise so each slice reads the already-updated previous block
        for start in range(coin, n + 1, coin):
            stop = min(start + coin, n + 1)
            dp[start:stop] += dp[start - coin : stop - coin]
    return [int(v) for v in dp]


# Coefficient readings for the second sum of the positive-combination identity
#   t_{1,j,k} = sum_{l=1}^{j-2} l(k-j) f_l + sum_{l=j-1}^{k-2} c(l) f_l.
POSLINCOMB_READINGS = {
    "printed": lambda l, j, k: l * (j - 1) * (k - l - 1),
    "corrected": lambda l, j, k: (j - 1) * (k - l - 1),
}


def t_vector(i: int, j: int, k: int, size: int) -> list[int]:
    """Coordinates 1..size of t_{i,j,k} = (j-k)e_i + (k-i)e_j + (i-j)e_k."""
    vec = [0] * size
    vec[i - 1] += j - k
    vec[j - 1] += k - i
    vec[k - 1] += i - j
    return vec


def f_vector(ell: int, size: int) -> list[int]:
    """Coordinates 1..size of f_l = -e_l + 2e_{l+1} - e_{l+2}."""
    vec = [0] * size
    for offset, c in ((0, -1), (1, 2), (2, -1)):
        if ell + offset <= size:
            vec[ell + offset - 1] += c
    return vec


def poslincomb_coefficients(j: int, k: int, reading: str = "corrected") -> list[int]:
    """Coefficients of f_1, ..., f_{k-2} under the chosen reading."""
    second = POSLINCOMB_READINGS[reading]
    return [ell * (k - j) if ell <= j - 2 else second(ell, j, k) for ell in range(1, k - 1)]


def check_poslincomb(j: int, k: int, reading: str = "corrected") -> bool:
    """Does t_{1,j,k} equal the stated positive combination of the f_l?"""
    if not 1 < j < k:
        raise ValueError("need 1 < j < k")
    coeffs = poslincomb_coefficients(j, k, reading)
    if any(c <= 0 for c in coeffs):
        return False
    total = [0] * k
    for ell, c in enumerate(coeffs, start=1):
        for idx, v in enumerate(f_vector(ell, k)):
            total[idx] += c * v
    return total == t_vector(1, j, k, k)


def validating_readings(j: int, k: int) -> dict[str, tuple[int, ...]]:
    """Readings for which the identity holds, mapped to their coefficient vectors."""
    return {
        name: tuple(poslincomb_coefficients(j, k, name))
        for name in POSLINCOMB_READINGS
        if check_poslincomb(j, k, name)
    }
