"""Ordinary and strict partitions, and the partition function p(n).

Partitions are plain tuples of positive integers in weakly decreasing
order.  ``p_table`` builds p(0..N) from Euler's pentagonal recurrence;
``p_bruteforce`` counts by explicit enumeration and serves as the
independent oracle.
"""

from __future__ import annotations

import enum
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from pathlib import Path

Partition = tuple[int, ...]
StrictPartition = tuple[int, ...]


class ParityFilter(str, enum.Enum):
    ANY = "any"
    EVEN_ONLY = "even_only"
    ODD_ONLY = "odd_only"


def is_partition(parts: Sequence[int]) -> bool:
    return all(p >= 1 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def is_strict(parts: Sequence[int]) -> bool:
    return all(p >= 1 for p in parts) and all(
        parts[i] > parts[i + 1] for i in range(len(parts) - 1)
    )


def _partitions(n: int, largest: int) -> Iterator[Partition]:
    if n == 0:
        yield ()
        return
    for head in range(min(n, largest), 0, -1):
        for tail in _partitions(n - head, head):
            yield (head,) + tail


def iter_partitions(n: int) -> Iterator[Partition]:
    """Yield partitions of ``n`` in lexicographically decreasing order."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    return _partitions(n, n)


def enumerate_partitions(n: int) -> list[Partition]:
    return list(iter_partitions(n))


def _strict(n: int, below: int, parity: int | None) -> Iterator[StrictPartition]:
    # ``below`` is an exclusive bound on the next part; ``parity`` is 0, 1 or None.
    if n == 0:
        yield ()
        return
    for head in range(min(n, below - 1), 0, -1):
        rest = n - head
        # every later part is < head, so at most head*(head-1)/2 still fits
        if rest > head * (head - 1) // 2:
            break
        if parity is not None and head % 2 != parity:
            continue
        for tail in _strict(rest, head, parity):
            yield (head,) + tail


def iter_strict_partitions(
    n: int, parity_filter: ParityFilter | str = ParityFilter.ANY
) -> Iterator[StrictPartition]:
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    parity = {
        ParityFilter.ANY: None,
        ParityFilter.EVEN_ONLY: 0,
        ParityFilter.ODD_ONLY: 1,
    }[ParityFilter(parity_filter)]
    return _strict(n, n + 1, parity)


def enumerate_strict_partitions(
    n: int, parity_filter: ParityFilter | str = ParityFilter.ANY
) -> list[StrictPartition]:
    """All strictly decreasing partitions of ``n`` whose parts pass the filter.

    Returned in lexicographically decreasing order; empty when nothing
    qualifies (for instance odd ``n`` with ``even_only``).
    """
    return list(iter_strict_partitions(n, parity_filter))


def pentagonal_pair(m: int) -> tuple[int, int]:
    """Return ``(m(3m-1)/2, m(3m+1)/2)`` for ``m >= 1``."""
    if m < 1:
        raise ValueError(f"pentagonal_pair needs m >= 1, got {m}")
    return m * (3 * m - 1) // 2, m * (3 * m + 1) // 2


@dataclass(frozen=True)
class CountTable:
    """Immutable table of p(0..N).

    Indexing with a negative argument returns 0; indexing past N raises.
    """

    values: tuple[int, ...]

    HEADER = "ptable v1 N={}"

    def __post_init__(self) -> None:
        if not self.values or self.values[0] != 1:
            raise ValueError("a partition count table must start with p(0) = 1")

    @property
    def N(self) -> int:
        return len(self.values) - 1

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, m: int) -> int:
        if m < 0:
            return 0
        if m > self.N:
            raise IndexError(f"p({m}) is beyond the table (N={self.N})")
        return self.values[m]

    def to_text(self) -> str:
        lines = [self.HEADER.format(self.N)]
        lines.extend(str(v) for v in self.values)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> CountTable:
        """Parse the cache format; raises ``ValueError`` on any inconsistency."""
        lines = text.splitlines()
        if not lines:
            raise ValueError("empty table file")
        header = lines[0].strip()
        prefix = "ptable v1 N="
        if not header.startswith(prefix):
            raise ValueError(f"bad header {header!r}")
        try:
            N = int(header[len(prefix):])
        except ValueError:
            raise ValueError(f"bad header {header!r}") from None
        body = lines[1:]
        if N < 0 or len(body) != N + 1:
            raise ValueError(f"header says N={N} but file holds {len(body)} values")
        values = []
        for line in body:
            if not line.isdigit():
                raise ValueError(f"non-decimal entry {line!r}")
            values.append(int(line))
        table = cls(tuple(values))
        for n in range(1, N + 1):
            if euler_alternating_check(n, table) != 0:
                raise ValueError(f"entry p({n}) fails the pentagonal recurrence")
        return table

    def save(self, path: str | Path) -> None:
        Path(path).write_text(self.to_text(), encoding="ascii")

    @classmethod
    def load(cls, path: str | Path) -> CountTable:
        return cls.from_text(Path(path).read_text(encoding="ascii"))


def p_table(N: int) -> CountTable:
    """p(0..N) via p(n) = sum_{m>=1} (-1)^(m+1) [p(n - m(3m-1)/2) + p(n - m(3m+1)/2)]."""
    if N < 0:
        raise ValueError(f"N must be nonnegative, got {N}")
    values = [1]
    for n in range(1, N + 1):
        total = 0
        m = 1
        while True:
            g_minus, g_plus = pentagonal_pair(m)
            if g_minus > n:
                break
            term = values[n - g_minus]
            if g_plus <= n:
                term += values[n - g_plus]
            total += term if m % 2 else -term
            m += 1
        values.append(total)
    return CountTable(tuple(values))


def p_bruteforce(n: int) -> int:
    return sum(1 for _ in iter_partitions(n))


def euler_alternating_check(n: int, table: CountTable) -> int:
    """Evaluate p(n) + sum_m (-1)^m [p(n - g-(m)) + p(n - g+(m))]; it should vanish."""
    if n < 1:
        raise ValueError(f"the pentagonal recurrence holds for n >= 1, got {n}")
    if n > table.N:
        raise ValueError(f"n={n} exceeds table size N={table.N}")
    total = table[n]
    m = 1
    while True:
        g_minus, g_plus = pentagonal_pair(m)
        if g_minus > n:
            break
        sign = -1 if m % 2 else 1
        total += sign * (table[n - g_minus] + table[n - g_plus])
        m += 1
    return total
