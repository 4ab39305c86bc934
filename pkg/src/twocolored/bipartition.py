"""Parallel bi-partition systems and their concatenation diagrams.

A system is a pair (L, R) of strict partitions into odd parts with
``|L| - |R| = c >= 0``.  Writing ``L = (2b_i + 1)`` and ``R = (2a_i + 1)``,
the major halves ``b_i + 1`` are drawn as columns, column i starting on
row i - 1, and the minor halves ``a_s`` are laid horizontally along rows
c, c+1, ... to the right of the blue cells.  The resulting diagram has
d cells: a staircase (1, 2, ..., c) on top and an unrestricted partition
of d - c(c+1)/2 below, and the construction is invertible.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from functools import lru_cache
from typing import Literal

from .partition_core import (
    Partition,
    ParityFilter,
    StrictPartition,
    enumerate_strict_partitions,
    is_partition,
    is_strict,
)

Orientation = Literal["normal", "swapped"]


def triangular(c: int) -> int:
    return c * (c + 1) // 2


def _check_odd_side(name: str, side: Sequence[int]) -> StrictPartition:
    side = tuple(side)
    if not is_strict(side):
        raise ValueError(f"{name} must be strictly decreasing with positive parts: {side}")
    if any(v % 2 == 0 for v in side):
        raise ValueError(f"{name} must contain odd parts only: {side}")
    return side


@dataclass(frozen=True)
class BiPartitionSystem:
    """``L`` is the longer side; ``orientation`` records whether the blue
    odd parts were moved to ``R`` to get there."""

    L: StrictPartition
    R: StrictPartition
    orientation: Orientation = "normal"

    def __post_init__(self) -> None:
        object.__setattr__(self, "L", _check_odd_side("L", self.L))
        object.__setattr__(self, "R", _check_odd_side("R", self.R))
        if len(self.L) < len(self.R):
            raise ValueError("L must have at least as many parts as R")
        if self.orientation not in ("normal", "swapped"):
            raise ValueError(f"unknown orientation {self.orientation!r}")

    @property
    def c(self) -> int:
        return len(self.L) - len(self.R)

    @property
    def k(self) -> int:
        return len(self.L)

    @property
    def j(self) -> int:
        return len(self.R)

    @property
    def weight(self) -> int:
        return sum(self.L) + sum(self.R)

    @property
    def beta_odd(self) -> StrictPartition:
        return self.R if self.orientation == "swapped" else self.L

    @property
    def alpha_odd(self) -> StrictPartition:
        return self.L if self.orientation == "swapped" else self.R


@dataclass(frozen=True)
class HalvedSides:
    beta_prime: tuple[int, ...]
    alpha_prime: tuple[int, ...]


@dataclass(frozen=True)
class ConcatDiagram:
    c: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        rows = tuple(self.rows)
        object.__setattr__(self, "rows", rows)
        if self.c < 0:
            raise ValueError(f"c must be nonnegative, got {self.c}")
        if rows[: self.c] != tuple(range(1, self.c + 1)):
            raise ValueError(f"rows {rows} do not start with the staircase 1..{self.c}")
        if not is_partition(rows[self.c:]):
            raise ValueError(f"rows below the staircase are not a partition: {rows[self.c:]}")

    @property
    def cells(self) -> int:
        return sum(self.rows)


def build_system(beta_odd: Sequence[int], alpha_odd: Sequence[int]) -> BiPartitionSystem:
    """Blue odd parts on the left, green on the right, swapped if green is longer."""
    beta = _check_odd_side("beta_odd", beta_odd)
    alpha = _check_odd_side("alpha_odd", alpha_odd)
    if len(beta) >= len(alpha):
        return BiPartitionSystem(beta, alpha, "normal")
    return BiPartitionSystem(alpha, beta, "swapped")


def halves(sys: BiPartitionSystem) -> HalvedSides:
    return HalvedSides(
        beta_prime=tuple((v - 1) // 2 + 1 for v in sys.L),
        alpha_prime=tuple((v - 1) // 2 for v in sys.R),
    )


def d_and_t(sys: BiPartitionSystem) -> tuple[int, int]:
    h = halves(sys)
    d = sum(h.alpha_prime) + sum(h.beta_prime)
    t = sum(a + 1 for a in h.alpha_prime) + sum(b - 1 for b in h.beta_prime)
    return d, t


def _blue_rows(beta_prime: Sequence[int]) -> list[int]:
    # column i (0-based) covers rows i .. i + beta_prime[i] - 1
    height = max((i + b for i, b in enumerate(beta_prime)), default=0)
    rows = [0] * height
    for i, b in enumerate(beta_prime):
        for r in range(i, i + b):
            rows[r] += 1
    return rows


def to_diagram(sys: BiPartitionSystem) -> ConcatDiagram:
    h = halves(sys)
    rows = _blue_rows(h.beta_prime)
    for s, a in enumerate(h.alpha_prime):
        rows[sys.c + s] += a
    return ConcatDiagram(sys.c, tuple(rows))


def render(sys: BiPartitionSystem) -> str:
    """ASCII drawing of the diagram: ``B`` blue cell, ``G`` green cell."""
    h = halves(sys)
    blue = _blue_rows(h.beta_prime)
    green = [0] * len(blue)
    for s, a in enumerate(h.alpha_prime):
        green[sys.c + s] = a
    lines = []
    for r, (b, g) in enumerate(zip(blue, green)):
        lines.append("B" * b + "G" * g)
        if r == sys.c - 1:
            lines.append("-" * max(len(lines[-1]), 1))
    return "\n".join(lines)


def diagram_to_residual(dia: ConcatDiagram) -> tuple[int, Partition]:
    return dia.c, dia.rows[dia.c:]


def residual_to_system(
    c: int, mu: Sequence[int], orientation: Orientation = "normal"
) -> BiPartitionSystem:
    """Rebuild the unique system whose diagram is ``(1, ..., c) ++ mu``."""
    mu = tuple(mu)
    if c < 0:
        raise ValueError(f"c must be nonnegative, got {c}")
    if not is_partition(mu):
        raise ValueError(f"not a partition: {mu}")
    if orientation == "swapped" and c == 0:
        raise ValueError("a swapped system needs c > 0")
    rho = tuple(range(1, c + 1)) + mu
    k = 0
    while k < len(rho) and rho[k] >= k + 1:
        k += 1
    alpha_prime = [rho[r] - (r + 1) for r in range(c, k)]
    blue = [min(w, r + 1) if r < k else w for r, w in enumerate(rho)]
    # column i of the blue region starts at row i and runs while rows are wide enough
    beta_prime = [sum(1 for w in blue if w > i) for i in range(k)]
    L = tuple(2 * b - 1 for b in beta_prime)
    R = tuple(2 * a + 1 for a in alpha_prime)
    return BiPartitionSystem(L, R, orientation)


@lru_cache(maxsize=None)
def _odd_strict_by_length(w: int) -> dict[int, tuple[StrictPartition, ...]]:
    out: dict[int, list[StrictPartition]] = {}
    for p in enumerate_strict_partitions(w, ParityFilter.ODD_ONLY):
        out.setdefault(len(p), []).append(p)
    return {length: tuple(ps) for length, ps in out.items()}


def iter_systems(c: int, d: int) -> Iterator[BiPartitionSystem]:
    """All normal-orientation systems with difference ``c`` and d-value ``d``.

    Since n = d + t and d - t = c, these are the systems of weight 2d - c;
    every pair of odd strict sides of that weight and length gap c is visited.
    """
    n = 2 * d - c
    if c < 0 or n < 0:
        return
    for w in range(n, -1, -1):
        rights = _odd_strict_by_length(n - w)
        for length, lefts in _odd_strict_by_length(w).items():
            for L in lefts:
                for R in rights.get(length - c, ()):
                    sys = BiPartitionSystem(L, R)
                    if d_and_t(sys)[0] == d:
                        yield sys


def count_systems_bruteforce(c: int, d: int) -> int:
    return sum(1 for _ in iter_systems(c, d))
