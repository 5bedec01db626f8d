"""Integer partitions and the elementary maps on them.

A partition is stored dense, as the tuple of its nonzero parts in weakly
decreasing order.  Reads past the last part return 0, which lets every
inequality below be written without bounds checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator


class PartitionParseError(ValueError):
    """Raised for malformed partition text; ``position`` is a 0-based column."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts are not weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise ValueError(f"negative part in {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: int) -> Partition:
        return cls(tuple(parts))

    def part(self, k: int) -> int:
        """The 1-based part lambda_k, zero beyond the last part."""
        if k < 1:
            raise IndexError("parts are indexed from 1")
        return self.parts[k - 1] if k <= len(self.parts) else 0

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def numparts(self) -> int:
        return len(self.parts)

    @property
    def largest(self) -> int:
        return self.parts[0] if self.parts else 0

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __add__(self, other: Partition) -> Partition:
        # monoid addition: componentwise sum of zero-padded sequences
        m = max(len(self), len(other))
        return Partition(tuple(self.part(k) + other.part(k) for k in range(1, m + 1)))

    def __str__(self) -> str:
        return format_partition(self)

    def __repr__(self) -> str:
        return f"Partition({self.parts!r})"


def parse_partition(text: str) -> Partition:
    """Parse ``4,4,2,2``; the empty string and ``0`` both give the empty partition."""
    stripped = text.strip()
    if stripped in ("", "0"):
        return Partition()
    offset = len(text) - len(text.lstrip())
    parts = []
    pos = offset
    for field in stripped.split(","):
        token = field.strip()
        col = pos + (len(field) - len(field.lstrip()))
        if not token.isdigit():
            raise PartitionParseError(f"expected a non-negative integer, got {token!r}", col)
        value = int(token)
        if parts and value > parts[-1]:
            raise PartitionParseError(f"part {value} exceeds previous part {parts[-1]}", col)
        parts.append(value)
        pos += len(field) + 1
    if 0 in parts and any(p for p in parts[parts.index(0):]):
        raise PartitionParseError("nonzero part after a zero", offset)
    return Partition(tuple(parts))


def format_partition(lam: Partition) -> str:
    return ",".join(str(p) for p in lam.parts)


def conjugate(lam: Partition) -> Partition:
    """Transpose of the Ferrers diagram: mu_j = #{i : lambda_i >= j}."""
    return Partition(tuple(sum(1 for p in lam.parts if p >= j) for j in range(1, lam.largest + 1)))


def ferrers(lam: Partition) -> frozenset[tuple[int, int]]:
    """Lattice points (i, j) with i < lambda_{j+1}."""
    return frozenset((i, j) for j, p in enumerate(lam.parts) for i in range(p))


def diff(lam: Partition) -> tuple[int, ...]:
    """First differences (lambda_1 - lambda_2, ...), padded to numparts + 2 entries."""
    return _delta(tuple(lam.part(k) for k in range(1, lam.numparts + 4)))[: lam.numparts + 2]


def diff2(lam: Partition) -> tuple[int, ...]:
    """Second differences lambda_l - 2 lambda_{l+1} + lambda_{l+2}, padded to numparts + 2."""
    seq = tuple(lam.part(k) for k in range(1, lam.numparts + 5))
    return _delta(_delta(seq))[: lam.numparts + 2]


def _delta(seq: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(a - b for a, b in zip(seq, seq[1:]))

