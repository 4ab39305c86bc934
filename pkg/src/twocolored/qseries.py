"""Truncated power series in q with exact integer coefficients.

A ``TruncatedSeries`` of order N holds the coefficients of q^0 .. q^N and
all arithmetic is carried out modulo q^(N+1).  Infinite products are
described by ``FactorSpec`` families and expanded factor by factor.
"""

from __future__ import annotations

import enum
from collections.abc import Iterable, Sequence
from dataclasses import dataclass


@dataclass(frozen=True)
class TruncatedSeries:
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise ValueError("a truncated series needs at least the q^0 coefficient")

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int], order: int | None = None) -> TruncatedSeries:
        """Build a series, padding with zeros or truncating to ``order`` if given."""
        values = list(coeffs)
        if order is not None:
            values = (values + [0] * (order + 1))[: order + 1]
        return cls(tuple(values))

    @classmethod
    def one(cls, order: int) -> TruncatedSeries:
        return cls.from_coeffs([1], order)

    @property
    def order(self) -> int:
        """The truncation order N."""
        return len(self.coeffs) - 1

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, n: int) -> int:
        return self.coeffs[n]

    def __mul__(self, other: TruncatedSeries) -> TruncatedSeries:
        return series_mul(self, other)


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product of two series of the same order, truncated."""
    if a.order != b.order:
        raise ValueError(f"truncation orders differ: {a.order} != {b.order}")
    N = a.order
    out = [0] * (N + 1)
    bc = b.coeffs
    for i, x in enumerate(a.coeffs):
        if not x:
            continue
        for j in range(N + 1 - i):
            y = bc[j]
            if y:
                out[i + j] += x * y
    return TruncatedSeries(tuple(out))


class FactorKind(str, enum.Enum):
    ONE_PLUS = "one_plus"  # (1 + q^e)
    ONE_MINUS = "one_minus"  # (1 - q^e)
    INV_ONE_MINUS = "inv_one_minus"  # 1/(1 - q^e) = 1 + q^e + q^2e + ...


@dataclass(frozen=True)
class FactorSpec:
    """The factor family over exponents ``offset, offset+step, offset+2*step, ...``."""

    offset: int
    step: int
    kind: FactorKind

    def __post_init__(self) -> None:
        if self.offset < 1 or self.step < 1:
            raise ValueError(f"offset and step must be >= 1, got {self.offset}, {self.step}")
        object.__setattr__(self, "kind", FactorKind(self.kind))

    def exponents(self, N: int) -> range:
        return range(self.offset, N + 1, self.step)


def _apply_factor(c: list[int], e: int, kind: FactorKind) -> None:
    # In-place multiplication of ``c`` by one factor at exponent e.
    N = len(c) - 1
    if kind is FactorKind.ONE_PLUS:
        for i in range(N, e - 1, -1):
            c[i] += c[i - e]
    elif kind is FactorKind.ONE_MINUS:
        for i in range(N, e - 1, -1):
            c[i] -= c[i - e]
    else:
        # ascending sweep: c[i] picks up c[i-e], c[i-2e], ... i.e. the
        # truncated geometric series 1 + q^e + q^2e + ...
        for i in range(e, N + 1):
            c[i] += c[i - e]


def truncated_product(factors: Sequence[FactorSpec], N: int) -> TruncatedSeries:
    """Expand the product of all factor families modulo q^(N+1).

    Exponents above N contribute 1 at this truncation and are skipped.
    """
    if N < 0:
        raise ValueError(f"N must be nonnegative, got {N}")
    c = [0] * (N + 1)
    c[0] = 1
    for spec in factors:
        for e in spec.exponents(N):
            _apply_factor(c, e, spec.kind)
    return TruncatedSeries(tuple(c))


ODD_PLUS = FactorSpec(1, 2, FactorKind.ONE_PLUS)
ODD_MINUS = FactorSpec(1, 2, FactorKind.ONE_MINUS)
ODD_INV = FactorSpec(1, 2, FactorKind.INV_ONE_MINUS)
EVEN_PLUS = FactorSpec(2, 2, FactorKind.ONE_PLUS)
EVEN_MINUS = FactorSpec(2, 2, FactorKind.ONE_MINUS)


def overline_po_series(N: int) -> TruncatedSeries:
    """Overpartitions into odd parts: (-q; q^2)_inf / (q; q^2)_inf."""
    return truncated_product([ODD_PLUS, ODD_INV], N)


def E_series(N: int) -> TruncatedSeries:
    # blue odd, green odd, blue even: each value used at most once per color
    return truncated_product([ODD_PLUS, ODD_PLUS, EVEN_PLUS], N)


class SignWeight(str, enum.Enum):
    EVEN_PARTS = "even_parts"
    ALL_PARTS = "all_parts"


def signed_difference_series(weight: SignWeight | str, N: int) -> TruncatedSeries:
    """E0 - E1 (sign by number of even parts) or E2 - E3 (sign by number of parts)."""
    weight = SignWeight(weight)
    if weight is SignWeight.EVEN_PARTS:
        factors = [ODD_PLUS, ODD_PLUS, EVEN_MINUS]
    else:
        factors = [ODD_MINUS, ODD_MINUS, EVEN_MINUS]
    return truncated_product(factors, N)
