"""Two-colored partitions counted by E(n), and overpartitions into odd parts.

An E-partition uses blue and green parts; blue values are pairwise
distinct, green values are pairwise distinct and odd, and a value may
appear once in each color (``3_b + 1_b + 1_g`` is a partition of 5).
"""

from __future__ import annotations

import enum
import itertools
from collections.abc import Iterator
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

from .partition_core import (
    Partition,
    ParityFilter,
    StrictPartition,
    enumerate_strict_partitions,
    is_strict,
)


class Color(str, enum.Enum):
    BLUE = "b"
    GREEN = "g"


class ColoredPart(NamedTuple):
    value: int
    color: Color

    def __str__(self) -> str:
        return f"{self.value}_{self.color.value}"


def _canonical_key(part: ColoredPart) -> tuple[int, int]:
    return (-part.value, 0 if part.color is Color.BLUE else 1)


@dataclass(frozen=True)
class TwoColoredPartition:
    """An E-class partition; ``parts`` is kept in canonical order."""

    parts: tuple[ColoredPart, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(
            ColoredPart(int(v), Color(c)) for v, c in self.parts
        )
        blue = [p.value for p in parts if p.color is Color.BLUE]
        green = [p.value for p in parts if p.color is Color.GREEN]
        if any(v < 1 for v in blue + green):
            raise ValueError("parts must be positive")
        if len(set(blue)) != len(blue) or len(set(green)) != len(green):
            raise ValueError("values must be distinct within each color")
        if any(v % 2 == 0 for v in green):
            raise ValueError("even parts must be blue")
        object.__setattr__(self, "parts", tuple(sorted(parts, key=_canonical_key)))

    @classmethod
    def parse(cls, text: str) -> TwoColoredPartition:
        """Parse ``"4_b+1_g"``; the empty string is the empty partition."""
        text = text.replace(" ", "")
        if not text:
            return cls()
        parts = []
        for token in text.split("+"):
            value, sep, color = token.partition("_")
            if not sep:
                raise ValueError(f"part {token!r} lacks a color suffix")
            parts.append((int(value), Color(color)))
        return cls(tuple(parts))

    @property
    def weight(self) -> int:
        return sum(p.value for p in self.parts)

    def __str__(self) -> str:
        return "+".join(str(p) for p in self.parts)

    def to_json(self) -> list[dict]:
        return [{"value": p.value, "color": p.color.value} for p in self.parts]


def classify(p: TwoColoredPartition) -> tuple[int, int]:
    """Return ``(number of even parts, number of parts)``."""
    return sum(1 for part in p.parts if part.value % 2 == 0), len(p.parts)


@lru_cache(maxsize=None)
def _blue_sets(w: int) -> tuple[StrictPartition, ...]:
    return tuple(enumerate_strict_partitions(w, ParityFilter.ANY))


@lru_cache(maxsize=None)
def _green_sets(w: int) -> tuple[StrictPartition, ...]:
    return tuple(enumerate_strict_partitions(w, ParityFilter.ODD_ONLY))


def _raw_E(n: int) -> Iterator[tuple[StrictPartition, StrictPartition]]:
    # (blue values, green values) pairs: one per E-partition of n
    for w in range(n, -1, -1):
        greens = _green_sets(n - w)
        for blue in _blue_sets(w):
            for green in greens:
                yield blue, green


def enumerate_E(n: int) -> list[TwoColoredPartition]:
    """Every E-partition of ``n`` exactly once, sorted by canonical part sequence."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    out = []
    for blue, green in _raw_E(n):
        parts = [ColoredPart(v, Color.BLUE) for v in blue]
        parts += [ColoredPart(v, Color.GREEN) for v in green]
        out.append(TwoColoredPartition(tuple(parts)))
    out.sort(key=lambda p: [_canonical_key(q) for q in p.parts])
    return out


class ECounts(NamedTuple):
    E: int
    E0: int
    E1: int
    E2: int
    E3: int


def counts(n: int) -> ECounts:
    """Exhaustive counts (E, E0, E1, E2, E3) for ``n``.

    Visits every E-partition once; E0/E1 split by parity of the number of
    even parts, E2/E3 by parity of the total number of parts.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    E0 = E1 = E2 = E3 = 0
    for blue, green in _raw_E(n):
        evens = sum(1 for v in blue if v % 2 == 0)
        if evens % 2:
            E1 += 1
        else:
            E0 += 1
        if (len(blue) + len(green)) % 2:
            E3 += 1
        else:
            E2 += 1
    return ECounts(E0 + E1, E0, E1, E2, E3)


@dataclass(frozen=True)
class OddTriple:
    lambda_even: StrictPartition
    alpha_odd: StrictPartition
    beta_odd: StrictPartition

    def __post_init__(self) -> None:
        for name in ("lambda_even", "alpha_odd", "beta_odd"):
            seq = tuple(getattr(self, name))
            if not is_strict(seq):
                raise ValueError(f"{name} must be strictly decreasing and positive: {seq}")
            object.__setattr__(self, name, seq)
        if any(v % 2 for v in self.lambda_even):
            raise ValueError(f"lambda_even holds an odd part: {self.lambda_even}")
        if any(v % 2 == 0 for v in self.alpha_odd + self.beta_odd):
            raise ValueError("alpha_odd and beta_odd must hold odd parts only")

    @property
    def i(self) -> int:
        return len(self.lambda_even)

    @property
    def j(self) -> int:
        return len(self.alpha_odd)

    @property
    def k(self) -> int:
        return len(self.beta_odd)


def decompose(p: TwoColoredPartition) -> OddTriple:
    """Split into blue even parts, green odd parts and blue odd parts."""
    lam = tuple(x.value for x in p.parts if x.color is Color.BLUE and x.value % 2 == 0)
    beta = tuple(x.value for x in p.parts if x.color is Color.BLUE and x.value % 2)
    alpha = tuple(x.value for x in p.parts if x.color is Color.GREEN)
    return OddTriple(lambda_even=lam, alpha_odd=alpha, beta_odd=beta)


def recompose(t: OddTriple) -> TwoColoredPartition:
    parts = [ColoredPart(v, Color.BLUE) for v in t.lambda_even + t.beta_odd]
    parts += [ColoredPart(v, Color.GREEN) for v in t.alpha_odd]
    return TwoColoredPartition(tuple(parts))


# Overpartitions into odd parts: the independent oracle for E(n).


class OddOverpartition(NamedTuple):
    parts: Partition
    overlined: tuple[int, ...]  # distinct values whose first occurrence is overlined

    def __str__(self) -> str:
        seen = set()
        tokens = []
        for v in self.parts:
            if v in self.overlined and v not in seen:
                tokens.append(f"~{v}")
            else:
                tokens.append(str(v))
            seen.add(v)
        return "+".join(tokens)

    def to_json(self) -> dict:
        return {"parts": list(self.parts), "overlined": list(self.overlined)}


def _odd_partitions(n: int, largest: int) -> Iterator[Partition]:
    if n == 0:
        yield ()
        return
    top = min(n, largest)
    if top % 2 == 0:
        top -= 1
    for head in range(top, 0, -2):
        for tail in _odd_partitions(n - head, head):
            yield (head,) + tail


def iter_odd_overpartitions(n: int) -> Iterator[OddOverpartition]:
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    for parts in _odd_partitions(n, n):
        values = sorted(set(parts), reverse=True)
        for mask in itertools.product((True, False), repeat=len(values)):
            yield OddOverpartition(parts, tuple(v for v, on in zip(values, mask) if on))


def count_odd_overpartitions(n: int) -> int:
    return sum(1 for _ in iter_odd_overpartitions(n))
