"""Franklin's involution on the blue even parts of an E-partition.

The map works on the halved form ``mu`` (every even part divided by 2),
which is an ordinary strict partition.  For nonempty ``mu`` let ``s`` be
its smallest part, ``sigma`` the length of the run of consecutive
integers that starts at the largest part, and ``k`` the number of parts.

* Case 1 (``s <= sigma``): add one to each of the ``s`` largest parts and
  drop the smallest part.
* Case 2 (``s > sigma``): subtract one from each of the ``sigma`` largest
  parts and append a new smallest part ``sigma``.

Neither case is reversible exactly when the run reaches the smallest part
(``sigma == k``) and ``s`` is ``sigma`` or ``sigma + 1``; those partitions
are the staircases ``(2m-1, ..., m)`` and ``(2m, ..., m+1)`` with circle
sums m(3m-1)/2 and m(3m+1)/2.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from typing import Literal

from .partition_core import StrictPartition, is_strict

Sign = Literal["minus", "plus"]


def halve_even(lambda_even: Sequence[int]) -> StrictPartition:
    if any(v < 2 or v % 2 for v in lambda_even):
        raise ValueError(f"every part must be even and >= 2: {tuple(lambda_even)}")
    if not is_strict(lambda_even):
        raise ValueError(f"parts must be strictly decreasing: {tuple(lambda_even)}")
    return tuple(v // 2 for v in lambda_even)


def double_parts(mu: Sequence[int]) -> tuple[int, ...]:
    return tuple(2 * v for v in mu)


def franklin_stats(mu: Sequence[int]) -> tuple[int, int, int]:
    """Return ``(s, sigma, k)`` for a nonempty strict partition."""
    if not mu:
        raise ValueError("franklin_stats needs a nonempty partition")
    sigma = 1
    while sigma < len(mu) and mu[sigma] == mu[0] - sigma:
        sigma += 1
    return mu[-1], sigma, len(mu)


@dataclass(frozen=True)
class FranklinOutcome:
    kind: Literal["moved", "fixed"]
    image: StrictPartition | None = None
    applied_case: Literal["case1", "case2"] | None = None
    m: int | None = None
    sign: Sign | None = None

    def to_json(self, doubled: bool = False) -> dict:
        if self.kind == "fixed":
            return {"case": "fixed", "fixed": {"m": self.m, "sign": self.sign}}
        image = double_parts(self.image) if doubled else self.image
        return {"case": self.applied_case, "image": list(image)}


def franklin_step(mu: Sequence[int]) -> FranklinOutcome:
    mu = tuple(mu)
    if not is_strict(mu):
        raise ValueError(f"not a strict partition: {mu}")
    s, sigma, k = franklin_stats(mu)
    if sigma == k and s == sigma:
        return FranklinOutcome("fixed", m=k, sign="minus")
    if sigma == k and s == sigma + 1:
        return FranklinOutcome("fixed", m=k, sign="plus")
    if s <= sigma:
        image = tuple(v + 1 for v in mu[:s]) + mu[s:-1]
        return FranklinOutcome("moved", image=image, applied_case="case1")
    image = tuple(v - 1 for v in mu[:sigma]) + mu[sigma:] + (sigma,)
    return FranklinOutcome("moved", image=image, applied_case="case2")


def franklin_step_even(lambda_even: Sequence[int]) -> FranklinOutcome:
    """Same map on the even parts themselves; ``image`` is returned doubled."""
    out = franklin_step(halve_even(lambda_even))
    if out.kind == "moved":
        return FranklinOutcome("moved", image=double_parts(out.image), applied_case=out.applied_case)
    return out


def staircase(m: int, sign: Sign) -> StrictPartition:
    if m < 0:
        raise ValueError(f"m must be nonnegative, got {m}")
    if sign == "minus":
        return tuple(range(2 * m - 1, m - 1, -1))
    return tuple(range(2 * m, m, -1))


def classify_staircase(mu: Sequence[int]) -> tuple[int, Sign | None] | None:
    """Identify ``mu`` as a pentagonal staircase.

    Returns ``(0, None)`` for the empty partition, ``(m, sign)`` for a
    staircase and ``None`` otherwise.
    """
    mu = tuple(mu)
    if not mu:
        return (0, None)
    m = len(mu)
    for sign in ("minus", "plus"):
        if mu == staircase(m, sign):
            return (m, sign)
    return None


def orbit(mu: Sequence[int]) -> list[StrictPartition]:
    """The orbit of ``mu``: a 2-cycle, or the single fixed point."""
    mu = tuple(mu)
    out = franklin_step(mu)
    if out.kind == "fixed":
        return [mu]
    return [mu, out.image]
