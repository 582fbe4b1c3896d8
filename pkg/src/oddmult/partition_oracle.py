"""Exact values of a(n): partitions whose parts all appear with odd multiplicity.

Ground truth for every parity claim in the package, deliberately computed
with plain integer arithmetic and no GF(2) machinery. Two independent
routes are provided: a generating-function DP over the per-part factors
1 + q^i + q^{3i} + q^{5i} + ..., and, for small n, explicit enumeration of
the qualifying partitions themselves.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

__all__ = [
    "PartitionCountTable",
    "build_table",
    "enumerate_partitions",
    "qualifying_partitions",
    "ENUMERATION_LIMIT",
]

# Enumeration is a desk-scale spot check; past this it stops being one.
ENUMERATION_LIMIT = 45

# The quadratic DP is comfortable up to about this limit (~10s); callers
# wanting more should expect a proportionally quadratic wait.
RECOMMENDED_TABLE_LIMIT = 20_000


@dataclass(frozen=True)
class PartitionCountTable:
    """a(0..limit) as exact integers."""

    limit: int
    values: tuple[int, ...]

    def __getitem__(self, n: int) -> int:
        return self.values[n]

    def parity(self, n: int) -> int:
        return self.values[n] & 1


def build_table(limit: int) -> PartitionCountTable:
    """Compute a(0..limit) exactly.

    Multiplies in the factor for each part size i, i.e. the series
    1 + q^i + q^{3i} + q^{5i} + ... truncated at limit. The inner update
    uses t = (old * q^i) / (1 - q^{2i}), so each part costs O(limit) big-int
    additions and the whole table O(limit^2).
    """
    if limit < 0:
        raise ValueError("limit must be >= 0")
    values = [0] * (limit + 1)
    values[0] = 1
    for part in range(1, limit + 1):
        contrib = [0] * (limit + 1)
        twice = 2 * part
        for n in range(part, limit + 1):
            x = values[n - part]
            if n >= twice:
                x += contrib[n - twice]
            contrib[n] = x
        for n in range(part, limit + 1):
            values[n] += contrib[n]
    return PartitionCountTable(limit, tuple(values))


def qualifying_partitions(n: int) -> Iterator[tuple[int, ...]]:
    """Yield the partitions of n in which every part has odd multiplicity.

    Parts appear in decreasing order within each partition; partitions come
    out ordered by largest part descending.
    """
    if n < 0:
        raise ValueError("n must be >= 0")

    def gen(remaining: int, max_part: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for part in range(min(max_part, remaining), 0, -1):
            for count in range(1, remaining // part + 1, 2):
                for rest in gen(remaining - part * count, part - 1):
                    yield (part,) * count + rest

    return gen(n, n)


def enumerate_partitions(n: int) -> int:
    """Count the qualifying partitions of n by explicit generation."""
    if n > ENUMERATION_LIMIT:
        raise ValueError(
            f"enumeration guard: n={n} exceeds {ENUMERATION_LIMIT}; use build_table"
        )
    return sum(1 for _ in qualifying_partitions(n))
