"""Partition streams and exact counts: p(n), p(n, r), p_c(n), p_c(n, r)."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache
from typing import Iterator

from staircase.closure import is_concave
from staircase.partition import Partition


def enumerate_partitions(n: int, r: int | None = None, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of n with at most r parts and parts <= max_part, reverse-lex order."""
    if n < 0:
        raise ValueError("n must be >= 0")
    parts: list[int] = []
    cap_r = n if r is None else r
    first = n if max_part is None else min(n, max_part)

    def rec(remaining: int, largest: int) -> Iterator[Partition]:
        if remaining == 0:
            yield Partition(tuple(parts))
            return
        if len(parts) >= cap_r:
            return
        for p in range(min(remaining, largest), 0, -1):
            parts.append(p)
            yield from rec(remaining - p, p)
            parts.pop()

    yield from rec(n, first)


def partition_count(n: int) -> int:
    """p(n) by Euler's pentagonal-number recurrence."""
    return pentagonal_counts(n)[n]


@lru_cache(maxsize=8)
def _pentagonal_table(n: int) -> tuple[int, ...]:
    p = [1] + [0] * n
    for m in range(1, n + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > m:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[m - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= m:
                total += sign * p[m - g2]
            k += 1
        p[m] = total
    return tuple(p)


def pentagonal_counts(n: int) -> tuple[int, ...]:
    return _pentagonal_table(n)


def restricted_counts(n: int, r: int) -> list[int]:
    """[p(0, r), ..., p(n, r)] from p(m, r) = p(m - r, r) + p(m, r - 1)."""
    row = [1] + [0] * n  # r = 0
    for s in range(1, r + 1):
        new = row[:]
        for m in range(s, n + 1):
            new[m] = new[m - s] + row[m]
        row = new
    return row


def count_all(n: int, r: int | None = None) -> int:
    if n < 0:
        raise ValueError("n must be >= 0")
    if r is None:
        return partition_count(n)
    return restricted_counts(n, r)[n]


def concave_partitions(max_weight: int, r: int | None = None, first: int | None = None) -> Iterator[Partition]:
    """Every concave partition of weight <= max_weight with at most r parts.

    Depth-first over part vectors.  A prefix lambda_1..lambda_m fixes every
    triple with k <= m, so a failing prefix cuts its whole subtree.
    ``first`` pins lambda_1 (used to split work between processes).
    """
    cap_r = max_weight if r is None else r
    lp = [0]

    def closes(m: int) -> bool:
        # triples (i, j, m+1) with lambda_{m+1} = 0
        k = m + 1
        for j in range(2, m + 1):
            for i in range(1, j):
                if lp[i] * (j - k) + lp[j] * (k - i) >= k - i:
                    return False
        return True

    def extends(m: int) -> bool:
        # triples (i, j, m) made decidable by the newest part
        for j in range(2, m):
            for i in range(1, j):
                if lp[i] * (j - m) + lp[j] * (m - i) + lp[m] * (i - j) >= m - i:
                    return False
        return True

    def rec(m: int, remaining: int, largest: int) -> Iterator[Partition]:
        if closes(m):
            yield Partition(tuple(lp[1:]))
        if m >= cap_r:
            return
        for p in range(min(remaining, largest), 0, -1):
            lp.append(p)
            if extends(m + 1):
                yield from rec(m + 1, remaining - p, p)
            lp.pop()

    if first is None:
        yield from rec(0, max_weight, max_weight)
    elif 0 < first <= max_weight and cap_r >= 1:
        lp.append(first)
        yield from rec(1, max_weight - first, first)
    elif first == 0:
        yield Partition()


def _counts_for_first(args: tuple[int, int | None, int]) -> list[int]:
    max_weight, r, first = args
    counts = [0] * (max_weight + 1)
    for lam in concave_partitions(max_weight, r, first):
        counts[lam.weight] += 1
    return counts


def worker_count() -> int:
    """Worker processes allowed by STAIRCASE_THREADS (0 or unset means one per CPU)."""
    raw = os.environ.get("STAIRCASE_THREADS", "0").strip() or "0"
    n = int(raw)
    return n if n > 0 else (os.cpu_count() or 1)


def concave_counts(max_weight: int, r: int | None = None, workers: int = 1) -> list[int]:
    """[p_c(0, r), ..., p_c(max_weight, r)] from a single pruned traversal."""
    if max_weight < 0:
        raise ValueError("n must be >= 0")
    if workers <= 1 or max_weight < 30:
        return _counts_for_first((max_weight, r, None))
    jobs = [(max_weight, r, first) for first in range(max_weight + 1)]
    total = [0] * (max_weight + 1)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for counts in pool.map(_counts_for_first, jobs):
            total = [a + b for a, b in zip(total, counts)]
    return total


def count_concave(n: int, r: int | None = None, prune: bool = True) -> int:
    if n < 0:
        raise ValueError("n must be >= 0")
    if prune:
        return sum(1 for lam in concave_partitions(n, r) if lam.weight == n)
    return sum(1 for lam in enumerate_partitions(n, r) if is_concave(lam))
