"""Staircase monoid ideals in N^2 and their integral closures.

The ideal I(lambda) is the complement of the Ferrers diagram.  Its integral
closure is the set of lattice points in the rational convex hull of I, which
for a staircase comes down to the lower convex envelope of the generator
corners.  Everything here is exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from staircase.partition import Partition

Point = tuple[int, int]


@dataclass(frozen=True)
class StaircaseIdeal:
    """Minimal generators (a, b), sorted by increasing b (so decreasing a)."""

    generators: tuple[Point, ...]

    def __post_init__(self):
        gens = tuple(sorted(((int(a), int(b)) for a, b in self.generators), key=lambda p: (p[1], -p[0])))
        for (a1, b1), (a2, b2) in zip(gens, gens[1:]):
            if not (b1 < b2 and a1 > a2):
                raise ValueError(f"generators do not form an antichain: {gens}")
        object.__setattr__(self, "generators", gens)

    @property
    def is_artinian(self) -> bool:
        return bool(self.generators) and self.generators[0][1] == 0 and self.generators[-1][0] == 0

    def __contains__(self, point: Point) -> bool:
        a, b = point
        return any(a >= ga and b >= gb for ga, gb in self.generators)

    def __str__(self) -> str:
        return format_staircase(self)


def format_staircase(ideal: StaircaseIdeal) -> str:
    return ";".join(f"{a},{b}" for a, b in ideal.generators)


def parse_staircase(text: str) -> StaircaseIdeal:
    points = []
    for chunk in text.strip().split(";"):
        a, b = chunk.split(",")
        points.append((int(a), int(b)))
    return StaircaseIdeal(tuple(points))


def staircase_of(lam: Partition) -> StaircaseIdeal:
    # (lambda_{j+1}, j) is a corner exactly when the row is shorter than the one below
    gens = [(lam.part(1), 0)]
    for j in range(1, lam.numparts + 1):
        if lam.part(j + 1) < lam.part(j):
            gens.append((lam.part(j + 1), j))
    return StaircaseIdeal(tuple(gens))


def partition_of(ideal: StaircaseIdeal) -> Partition:
    if not ideal.is_artinian:
        raise ValueError(f"ideal {ideal} is not artinian: needs a generator on each axis")
    parts = []
    gens = ideal.generators
    height = gens[-1][1]
    g = 0
    for j in range(height):
        while g + 1 < len(gens) and gens[g + 1][1] <= j:
            g += 1
        parts.append(gens[g][0])
    return Partition(tuple(parts))


def _cross(o: Point, p: Point, q: Point) -> int:
    return (p[0] - o[0]) * (q[1] - o[1]) - (p[1] - o[1]) * (q[0] - o[0])


def closure_hull(lam: Partition) -> list[Point]:
    """Vertices (a, b) of the lower-left hull of I(lambda), by increasing b.

    Collinear interior points are dropped.
    """
    # work in (b, a) coordinates: a lower convex chain of a decreasing function
    pts = [(b, a) for a, b in staircase_of(lam).generators]
    hull: list[Point] = []
    for p in pts:
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], p) <= 0:
            hull.pop()
        hull.append(p)
    return [(a, b) for b, a in hull]


def _ceil_div(num: int, den: int) -> int:
    return -((-num) // den)


def integral_closure(lam: Partition) -> Partition:
    hull = closure_hull(lam)
    parts = []
    for (a1, b1), (a2, b2) in zip(hull, hull[1:]):
        span = b2 - b1
        for j in range(b1, b2):
            # ceil of the a-coordinate on the segment at height j
            parts.append(_ceil_div(a1 * span + (a2 - a1) * (j - b1), span))
    return Partition(tuple(parts))


def is_concave(lam: Partition) -> bool:
    """Check lambda_i(j-k) + lambda_j(k-i) + lambda_k(i-j) < k-i for i<j<k<=r+1.

    Triples with k > r+1 are implied: the slack at fixed i<j shrinks linearly
    in k once lambda_k = 0.
    """
    lp = [0] + [lam.part(k) for k in range(1, lam.numparts + 2)]
    for i, j, k in combinations(range(1, lam.numparts + 2), 3):
        if lp[i] * (j - k) + lp[j] * (k - i) + lp[k] * (i - j) >= k - i:
            return False
    return True


def _minimal(points) -> list[Point]:
    out: list[Point] = []
    for a, b in sorted(set(points)):
        if not out or b < out[-1][1]:
            out.append((a, b))
    return out


def closure_oracle(lam: Partition, bound: int) -> Partition:
    """Partition of {p : l*p in l*I for some 1 <= l <= bound}, by brute force.

    ``l*I`` is the l-fold sumset I + ... + I (the monomial ideal I^l).  No
    geometry is used, so this checks :func:`integral_closure` independently.
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    gens = list(staircase_of(lam).generators)
    r = lam.numparts
    rows = [lam.part(b + 1) for b in range(r)]
    power = gens
    for ell in range(1, bound + 1):
        if ell > 1:
            power = _minimal((p[0] + q[0], p[1] + q[1]) for p in power for q in gens)
        for b in range(r):
            # smallest x with (x, ell*b) in ell*I
            h = min(x for x, y in power if y <= ell * b)
            rows[b] = min(rows[b], _ceil_div(h, ell))
    return Partition(tuple(rows))
