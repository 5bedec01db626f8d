"""Truncated power series, sparse polynomials, and the generating functions
for concave and super-concave partitions.

The concave generating function with at most r parts has the same
denominator prod_{i<=r} (1 - t^{T_i}) as the super-concave one; multiplying
the counted series by that denominator must leave a polynomial Q_r of degree
below T_1 + ... + T_r.  The extraction routines check this in a window past
the bound and raise :class:`NumeratorError` if it fails.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

from staircase.enumerate import concave_counts, concave_partitions
from staircase.superconcave import triangular

MARGIN = 10
MAX_CHEAP_R = 4


class NumeratorError(ArithmeticError):
    """The numerator of a rational generating function was not a polynomial."""


@dataclass(frozen=True)
class UniSeries:
    """c_0 + c_1 t + ... + c_N t^N + O(t^{N+1}) with exact integer coefficients."""

    coeffs: tuple[int, ...]
    order: int

    def __post_init__(self):
        c = tuple(int(v) for v in self.coeffs[: self.order + 1])
        c = c + (0,) * (self.order + 1 - len(c))
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def from_list(cls, coeffs, order: int | None = None) -> UniSeries:
        coeffs = list(coeffs)
        return cls(tuple(coeffs), len(coeffs) - 1 if order is None else order)

    @classmethod
    def monomial(cls, k: int, order: int, coef: int = 1) -> UniSeries:
        c = [0] * (order + 1)
        if k <= order:
            c[k] = coef
        return cls(tuple(c), order)

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k]

    def _common(self, other: UniSeries | int) -> tuple[UniSeries, int]:
        if isinstance(other, int):
            other = UniSeries.monomial(0, self.order, other)
        return other, min(self.order, other.order)

    def __add__(self, other):
        other, n = self._common(other)
        return UniSeries(tuple(a + b for a, b in zip(self.coeffs[: n + 1], other.coeffs)), n)

    __radd__ = __add__

    def __neg__(self):
        return UniSeries(tuple(-a for a in self.coeffs), self.order)

    def __sub__(self, other):
        other, _ = self._common(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return UniSeries(tuple(a * other for a in self.coeffs), self.order)
        n = min(self.order, other.order)
        out = [0] * (n + 1)
        b = other.coeffs
        for i, a in enumerate(self.coeffs[: n + 1]):
            if a:
                for j in range(n + 1 - i):
                    if b[j]:
                        out[i + j] += a * b[j]
        return UniSeries(tuple(out), n)

    __rmul__ = __mul__

    def inverse(self) -> UniSeries:
        """Multiplicative inverse; the constant term must be +1 or -1."""
        c0 = self.coeffs[0]
        if c0 not in (1, -1):
            raise ZeroDivisionError("constant term is not a unit in Z")
        n = self.order
        inv = [0] * (n + 1)
        inv[0] = c0
        for m in range(1, n + 1):
            s = sum(self.coeffs[k] * inv[m - k] for k in range(1, m + 1))
            inv[m] = -s * c0
        return UniSeries(tuple(inv), n)

    def __truediv__(self, other: UniSeries) -> UniSeries:
        return self * other.inverse()

    def truncate(self, order: int) -> UniSeries:
        return UniSeries(self.coeffs, min(order, self.order))

    @property
    def degree(self) -> int:
        """Index of the last nonzero coefficient inside the window (-1 if none)."""
        for k in range(self.order, -1, -1):
            if self.coeffs[k]:
                return k
        return -1

    def value_at_one(self) -> int:
        return sum(self.coeffs)

    def to_text(self, var: str = "t") -> str:
        terms = [(k, c) for k, c in enumerate(self.coeffs) if c]
        return _join_terms((c, _power(var, k)) for k, c in terms)

    def __str__(self) -> str:
        return self.to_text()


def _power(var: str, k: int) -> str:
    if k == 0:
        return ""
    return var if k == 1 else f"{var}^{k}"


def _join_terms(terms) -> str:
    out = []
    for coef, mono in terms:
        sign = "-" if coef < 0 else "+"
        mag = abs(coef)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not out:
            out.append(body if sign == "+" else f"-{body}")
        else:
            out.append(f" {sign} {body}")
    return "".join(out) if out else "0"


@dataclass(frozen=True)
class MultiPoly:
    """Sparse polynomial in x_1..x_arity keyed by exponent vectors."""

    arity: int
    terms: dict[tuple[int, ...], int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for exps, c in self.terms.items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != self.arity:
                raise ValueError(f"exponent vector {exps} does not have arity {self.arity}")
            if c:
                clean[exps] = clean.get(exps, 0) + int(c)
        object.__setattr__(self, "terms", {e: c for e, c in clean.items() if c})

    @classmethod
    def one(cls, arity: int) -> MultiPoly:
        return cls(arity, {(0,) * arity: 1})

    @classmethod
    def monomial(cls, exps, coef: int = 1) -> MultiPoly:
        exps = tuple(exps)
        return cls(len(exps), {exps: coef})

    def __eq__(self, other) -> bool:
        return isinstance(other, MultiPoly) and self.arity == other.arity and self.terms == other.terms

    def __hash__(self):
        return hash((self.arity, frozenset(self.terms.items())))

    def __add__(self, other: MultiPoly) -> MultiPoly:
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return MultiPoly(self.arity, out)

    def __neg__(self):
        return MultiPoly(self.arity, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: MultiPoly) -> MultiPoly:
        return self + (-other)

    def mul(self, other: MultiPoly, max_degree: int | None = None) -> MultiPoly:
        """Product, dropping terms of total degree above ``max_degree``."""
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            d1 = sum(e1)
            for e2, c2 in other.terms.items():
                if max_degree is not None and d1 + sum(e2) > max_degree:
                    continue
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MultiPoly(self.arity, out)

    def __mul__(self, other: MultiPoly) -> MultiPoly:
        return self.mul(other)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def value_at_ones(self) -> int:
        return sum(self.terms.values())

    def set_last_zero(self) -> MultiPoly:
        """Q(x_1, ..., x_{r-1}, 0) as a polynomial in r-1 variables."""
        return MultiPoly(self.arity - 1, {e[:-1]: c for e, c in self.terms.items() if e[-1] == 0})

    def extend(self, arity: int) -> MultiPoly:
        pad = (0,) * (arity - self.arity)
        return MultiPoly(arity, {e + pad: c for e, c in self.terms.items()})

    def specialize(self) -> UniSeries:
        """Substitute x_i = t for all i."""
        deg = max(self.total_degree(), 0)
        coeffs = [0] * (deg + 1)
        for e, c in self.terms.items():
            coeffs[sum(e)] += c
        return UniSeries(tuple(coeffs), deg)

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        """Graded lexicographic: total degree ascending, then x_1 exponent first (larger first)."""
        return sorted(self.terms.items(), key=lambda item: (sum(item[0]), tuple(-a for a in item[0])))

    def to_text(self) -> str:
        def mono(exps):
            return "*".join(_power(f"x{i}", a) for i, a in enumerate(exps, start=1) if a)

        return _join_terms((c, mono(e)) for e, c in self.sorted_terms())

    def __str__(self) -> str:
        return self.to_text()


def parse_multipoly(text: str, arity: int) -> MultiPoly:
    """Inverse of :meth:`MultiPoly.to_text`."""
    terms: dict[tuple[int, ...], int] = {}
    for sign, body in _split_terms(text):
        coef = 1
        exps = [0] * arity
        for factor in body.split("*"):
            if factor.startswith("x"):
                name, _, power = factor.partition("^")
                exps[int(name[1:]) - 1] += int(power) if power else 1
            else:
                coef *= int(factor)
        key = tuple(exps)
        terms[key] = terms.get(key, 0) + sign * coef
    return MultiPoly(arity, terms)


def parse_uniseries(text: str, var: str = "t") -> UniSeries:
    coeffs: dict[int, int] = {}
    for sign, body in _split_terms(text):
        coef = 1
        k = 0
        for factor in body.split("*"):
            if factor.startswith(var):
                _, _, power = factor.partition("^")
                k += int(power) if power else 1
            else:
                coef *= int(factor)
        coeffs[k] = coeffs.get(k, 0) + sign * coef
    deg = max(coeffs, default=0)
    return UniSeries(tuple(coeffs.get(k, 0) for k in range(deg + 1)), deg)


def _split_terms(text: str):
    text = text.replace(" ", "")
    if text in ("", "0"):
        return
    if text[0] not in "+-":
        text = "+" + text
    start = 0
    for pos in range(1, len(text) + 1):
        if pos == len(text) or text[pos] in "+-":
            chunk = text[start:pos]
            yield (-1 if chunk[0] == "-" else 1), chunk[1:]
            start = pos


# --- generating functions -------------------------------------------------


def denominator_degree(r: int) -> int:
    """T_1 + ... + T_r = r(r+1)(r+2)/6."""
    return r * (r + 1) * (r + 2) // 6


def staircase_denominator(r: int | None, order: int) -> UniSeries:
    """prod (1 - t^{T_i}) over i <= r (all i when r is None), mod t^{order+1}."""
    out = UniSeries.monomial(0, order)
    i = 1
    while (r is None or i <= r) and triangular(i) <= order:
        out = out * (1 - UniSeries.monomial(triangular(i), order))
        i += 1
    return out


def ps_series(r: int | None, order: int) -> UniSeries:
    """Super-concave generating function prod_{i<=r} 1/(1 - t^{T_i}) mod t^{order+1}."""
    if order < 0:
        raise ValueError("truncation order must be >= 0")
    coeffs = [1] + [0] * order
    i = 1
    while (r is None or i <= r) and triangular(i) <= order:
        step = triangular(i)
        # multiply by 1/(1 - t^step): running sums along stride `step`
        for m in range(step, order + 1):
            coeffs[m] += coeffs[m - step]
        i += 1
    return UniSeries(tuple(coeffs), order)


def pc_series(r: int | None, order: int, workers: int = 1) -> UniSeries:
    """Concave generating function sum p_c(n, r) t^n mod t^{order+1}."""
    if order < 0:
        raise ValueError("truncation order must be >= 0")
    return UniSeries(tuple(concave_counts(order, r, workers)), order)


def _check_numerator(q: UniSeries, bound: int, what: str) -> None:
    bad = [k for k in range(bound, q.order + 1) if q[k]]
    if bad:
        raise NumeratorError(f"{what}: nonzero coefficients at t^{bad} past degree bound {bound}")


@lru_cache(maxsize=None)
def extract_qr(r: int, margin: int = MARGIN) -> UniSeries:
    """Numerator Q_r(t) of the concave generating function with at most r parts."""
    if r < 1:
        raise ValueError("r must be >= 1")
    bound = denominator_degree(r)
    order = bound + margin
    q = pc_series(r, order) * staircase_denominator(r, order)
    _check_numerator(q, bound, f"Q_{r}(t)")
    poly = q.truncate(max(q.degree, 0))
    if poly.value_at_one() != 1:
        raise NumeratorError(f"Q_{r}(1) = {poly.value_at_one()}, expected 1")
    return poly


def staircase_monomial(i: int, arity: int) -> tuple[int, ...]:
    """Exponent vector of x^{delta_i} = prod_{j<=i} x_j^{1+i-j}."""
    return tuple(1 + i - j if j <= i else 0 for j in range(1, arity + 1))


def pc_multivariate(r: int, max_degree: int) -> MultiPoly:
    """sum of x^lambda over concave lambda with at most r parts, weight <= max_degree."""
    terms = {}
    for lam in concave_partitions(max_degree, r):
        terms[tuple(lam.part(k) for k in range(1, r + 1))] = 1
    return MultiPoly(r, terms)


@lru_cache(maxsize=None)
def extract_qr_multivariate(r: int, margin: int = MARGIN, expensive: bool = False) -> MultiPoly:
    """Numerator Q_r(x_1, ..., x_r) of the multivariate concave generating function.

    Truncation is by total degree.  Checks integer coefficients, Q_r(1,...,1) = 1,
    weakly decreasing exponent vectors and Q_r(x_1, ..., x_{r-1}, 0) = Q_{r-1}.
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    if r > MAX_CHEAP_R and not expensive:
        raise ValueError(f"r = {r} exceeds the cost guard {MAX_CHEAP_R}; pass expensive=True")
    bound = denominator_degree(r)
    top = bound + margin
    q = pc_multivariate(r, top)
    for i in range(1, r + 1):
        factor = MultiPoly(r, {(0,) * r: 1, staircase_monomial(i, r): -1})
        q = q.mul(factor, max_degree=top)

    late = {e: c for e, c in q.terms.items() if sum(e) >= bound}
    if late:
        raise NumeratorError(f"Q_{r}: terms of total degree >= {bound}: {sorted(late)[:5]}")
    if q.value_at_ones() != 1:
        raise NumeratorError(f"Q_{r}(1, ..., 1) = {q.value_at_ones()}, expected 1")
    for e in q.terms:
        if any(a < b for a, b in zip(e, e[1:])):
            raise NumeratorError(f"Q_{r}: exponent vector {e} is not weakly decreasing")
    if r > 1:
        prev = extract_qr_multivariate(r - 1, margin, expensive)
        if q.set_last_zero() != prev:
            raise NumeratorError(f"Q_{r}(x_1, ..., x_{r - 1}, 0) differs from Q_{r - 1}")
    return q


# --- asymptotics ----------------------------------------------------------


def zeta_three_halves(tol: float = 1e-12) -> float:
    """zeta(3/2) by direct summation with a midpoint integral tail.

    For convex f the midpoint rule error on [K-1/2, inf) is at most
    |f'(K-1)|/24 = (3/48)(K-1)^{-5/2}; K is chosen to push that below ``tol``.
    """
    K = math.ceil((3 / 48 / tol) ** 0.4) + 2
    head = math.fsum(k ** -1.5 for k in range(1, K))
    return head + 2 / math.sqrt(K - 0.5)


@dataclass(frozen=True)
class AsymptoticConstants:
    C: float
    c: float


@lru_cache(maxsize=1)
def asymptotic_constants() -> AsymptoticConstants:
    C = 2 ** (-1 / 3) * (zeta_three_halves() * math.gamma(1.5)) ** (2 / 3)
    c = math.sqrt(3) / 12 * (C / math.pi) ** 1.5
    return AsymptoticConstants(C, c)


def asymptotic_estimate(n: int) -> float:
    """c n^{-3/2} exp(3 C n^{1/3}), the leading-order estimate of p_sc(n)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    k = asymptotic_constants()
    return k.c * n ** -1.5 * math.exp(3 * k.C * n ** (1 / 3))
