"""Concave and super-concave integer partitions, staircase monomial ideals,
and their generating functions."""

from staircase.partition import Partition, conjugate, diff, diff2, ferrers, parse_partition
from staircase.closure import (
    StaircaseIdeal,
    closure_oracle,
    integral_closure,
    is_concave,
    partition_of,
    staircase_of,
)
from staircase.superconcave import (
    check_poslincomb,
    count_superconcave,
    decompose,
    is_superconcave,
    recompose,
)
from staircase.enumerate import count_all, count_concave, enumerate_partitions

__all__ = [
    "Partition",
    "StaircaseIdeal",
    "check_poslincomb",
    "closure_oracle",
    "conjugate",
    "count_all",
    "count_concave",
    "count_superconcave",
    "decompose",
    "diff",
    "diff2",
    "enumerate_partitions",
    "ferrers",
    "integral_closure",
    "is_concave",
    "is_superconcave",
    "parse_partition",
    "partition_of",
    "recompose",
    "staircase_of",
]
