"""Verification sweeps for the E(n) identities, the involution and the bijection.

Each sweep returns a ``VerificationReport``; failures are collected, never
raised.  Enumeration sweeps visit every object; series sweeps read
coefficients of the truncated products.
"""

from __future__ import annotations

import json
import math
import time
from collections.abc import Callable, Iterable
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Literal

from . import bipartition as bp
from .colored_partitions import count_odd_overpartitions, counts, enumerate_E
from .franklin import classify_staircase, double_parts, franklin_step, staircase
from .partition_core import (
    CountTable,
    enumerate_partitions,
    euler_alternating_check,
    is_strict,
    iter_strict_partitions,
    p_bruteforce,
    p_table,
)
from .qseries import E_series, overline_po_series, signed_difference_series

Method = Literal["enumeration", "series", "both"]

ENUMERATION_CAP = 60
SERIES_CAP = 2000


@dataclass(frozen=True)
class Failure:
    n: Any
    expected: Any
    actual: Any

    def to_dict(self) -> dict:
        return {"n": str(self.n), "expected": str(self.expected), "actual": str(self.actual)}


@dataclass
class VerificationReport:
    theorem_id: str
    method: str
    n_min: int
    n_max: int
    failures: list[Failure] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def status(self) -> Literal["pass", "fail"]:
        return "fail" if self.failures else "pass"

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, n: Any, expected: Any, actual: Any) -> None:
        self.failures.append(Failure(n, expected, actual))

    def to_dict(self, include_elapsed: bool = True) -> dict:
        out = {
            "theorem_id": self.theorem_id,
            "method": self.method,
            "range": [self.n_min, self.n_max],
            "status": self.status,
            "failures": [f.to_dict() for f in self.failures],
            "notes": list(self.notes),
        }
        if include_elapsed:
            out["elapsed"] = round(self.elapsed, 6)
        return out

    def to_json(self, include_elapsed: bool = False) -> str:
        return json.dumps(self.to_dict(include_elapsed))

    def summary_line(self) -> str:
        return (
            f"{self.theorem_id:<10} {self.method:<12} [{self.n_min}, {self.n_max}]"
            f"  {self.status.upper():<4}  failures={len(self.failures)}  {self.elapsed:.2f}s"
        )


def format_table(reports: Iterable[VerificationReport]) -> str:
    lines = [f"{'theorem':<10} {'method':<12} range  status"]
    for r in reports:
        lines.append(r.summary_line())
        for f in r.failures[:10]:
            lines.append(f"    n={f.n}: expected {f.expected}, got {f.actual}")
        for note in r.notes:
            lines.append(f"    note: {note}")
    return "\n".join(lines)


def merge(theorem_id: str, parts: list[VerificationReport]) -> VerificationReport:
    out = VerificationReport(
        theorem_id, "both", min(p.n_min for p in parts), max(p.n_max for p in parts)
    )
    for p in parts:
        out.failures.extend(p.failures)
        out.notes.extend(f"{p.method}: {note}" for note in p.notes)
        out.elapsed += p.elapsed
    return out


def is_square(n: int) -> bool:
    return n >= 0 and math.isqrt(n) ** 2 == n


def expected_halves(po: int, n: int) -> dict[str, Fraction]:
    """Closed forms for E0..E3 in terms of the odd-overpartition count."""
    half = Fraction(po, 2)
    sq = 1 if is_square(n) else 0
    alt = (-1) ** n * sq
    return {"E0": half + sq, "E1": half - sq, "E2": half + alt, "E3": half - alt}


def expected_differences(n: int) -> tuple[int, int]:
    """(E0 - E1, E2 - E3) as predicted: (2, 2(-1)^n) at squares, else (0, 0)."""
    if is_square(n):
        return 2, 2 * (-1) ** n
    return 0, 0


def _enum_row(n: int) -> tuple[int, tuple[int, int, int, int, int], int]:
    return n, tuple(counts(n)), count_odd_overpartitions(n)


def _map(fn: Callable, items: list, jobs: int) -> list:
    if jobs <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


def _check_method(method: str, n_max: int, enum_cap: int, series_cap: int) -> None:
    if method not in ("enumeration", "series", "both"):
        raise ValueError(f"unknown method {method!r}")
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    if method in ("enumeration", "both") and n_max > enum_cap:
        raise ValueError(f"enumeration is capped at n <= {enum_cap}, got {n_max}")
    if method == "series" and n_max > series_cap:
        raise ValueError(f"series sweeps are capped at n <= {series_cap}, got {n_max}")


def _zero_note(E0: int, po: int) -> str:
    return (
        f"n=0 not checked: E0(0)={E0} while po(0)/2 + 1 = {Fraction(po, 2) + 1}; "
        "the closed forms hold for n >= 1"
    )


def _rows_by_enumeration(n_max: int, jobs: int) -> list[tuple[int, tuple, int]]:
    return _map(_enum_row, list(range(0, n_max + 1)), jobs)


def _rows_by_series(n_max: int) -> list[tuple[int, tuple, int]]:
    E = E_series(n_max)
    po = overline_po_series(n_max)
    A = signed_difference_series("even_parts", n_max)
    B = signed_difference_series("all_parts", n_max)
    rows = []
    for n in range(n_max + 1):
        # each split is integral because E(n) and E0-E1 share parity
        E0, r0 = divmod(E[n] + A[n], 2)
        E2, r2 = divmod(E[n] + B[n], 2)
        if r0 or r2:
            raise ArithmeticError(f"series coefficients at n={n} have mismatched parity")
        rows.append((n, (E[n], E0, E[n] - E0, E2, E[n] - E2), po[n]))
    return rows


def _rows(method: str, n_max: int, jobs: int):
    if method == "enumeration":
        return _rows_by_enumeration(n_max, jobs)
    return _rows_by_series(n_max)


def verify_theorem_E(
    n_max: int,
    method: Method = "enumeration",
    *,
    jobs: int = 1,
    enum_cap: int = ENUMERATION_CAP,
    series_cap: int = SERIES_CAP,
) -> VerificationReport:
    """E(n) = po(n) and the four half-count formulas for 1 <= n <= n_max."""
    _check_method(method, n_max, enum_cap, series_cap)
    if method == "both":
        return merge("thmE", [
            verify_theorem_E(n_max, "enumeration", jobs=jobs, enum_cap=enum_cap),
            verify_theorem_E(n_max, "series", series_cap=series_cap),
        ])
    start = time.perf_counter()
    report = VerificationReport("thmE", method, 1, n_max)
    for n, (E, E0, E1, E2, E3), po in _rows(method, n_max, jobs):
        if n == 0:
            report.notes.append(_zero_note(E0, po))
            continue
        if E != po:
            report.fail(n, f"E=po={po}", f"E={E}")
        if E0 + E1 != E or E2 + E3 != E:
            report.fail(n, f"E0+E1=E2+E3={E}", f"E0+E1={E0 + E1}, E2+E3={E2 + E3}")
        want = expected_halves(po, n)
        for name, got in zip(("E0", "E1", "E2", "E3"), (E0, E1, E2, E3)):
            if got != want[name]:
                report.fail(n, f"{name}={want[name]}", f"{name}={got}")
    report.elapsed = time.perf_counter() - start
    return report


def verify_theorem_Q(
    n_max: int,
    method: Method = "enumeration",
    *,
    jobs: int = 1,
    enum_cap: int = ENUMERATION_CAP,
    series_cap: int = SERIES_CAP,
) -> VerificationReport:
    """E0 - E1 and E2 - E3 vanish off the squares and equal 2, 2(-1)^n on them."""
    _check_method(method, n_max, enum_cap, series_cap)
    if method == "both":
        return merge("thmQ", [
            verify_theorem_Q(n_max, "enumeration", jobs=jobs, enum_cap=enum_cap),
            verify_theorem_Q(n_max, "series", series_cap=series_cap),
        ])
    start = time.perf_counter()
    report = VerificationReport("thmQ", method, 1, n_max)
    if method == "enumeration":
        diffs = []
        for n, (E, E0, E1, E2, E3), _ in _rows_by_enumeration(n_max, jobs):
            diffs.append((n, E0 - E1, E2 - E3))
    else:
        A = signed_difference_series("even_parts", n_max)
        B = signed_difference_series("all_parts", n_max)
        diffs = [(n, A[n], B[n]) for n in range(n_max + 1)]
    nonzero = []
    for n, a, b in diffs:
        if n == 0:
            report.notes.append(f"n=0 not checked: E0-E1={a}, E2-E3={b}")
            continue
        want_a, want_b = expected_differences(n)
        if a != want_a:
            report.fail(n, f"E0-E1={want_a}", f"E0-E1={a}")
        if b != want_b:
            report.fail(n, f"E2-E3={want_b}", f"E2-E3={b}")
        if a or b:
            nonzero.append(n)
    squares = [k * k for k in range(1, math.isqrt(n_max) + 1)]
    if nonzero != squares:
        report.fail("support", squares, nonzero)
    report.elapsed = time.perf_counter() - start
    return report


def pentagonal_sums(limit: int) -> dict[int, list[tuple[int, str]]]:
    """Circle sums m(3m-1)/2 and m(3m+1)/2 up to ``limit``, keyed by sum."""
    out: dict[int, list[tuple[int, str]]] = {}
    m = 1
    while m * (3 * m - 1) // 2 <= limit:
        for sign, S in (("minus", m * (3 * m - 1) // 2), ("plus", m * (3 * m + 1) // 2)):
            if S <= limit:
                out.setdefault(S, []).append((m, sign))
        m += 1
    return out


def verify_franklin(circle_sum_max: int, *, cap: int = ENUMERATION_CAP) -> VerificationReport:
    """Check the involution on every strict partition with circle sum <= the bound."""
    if not 0 <= circle_sum_max <= cap:
        raise ValueError(f"circle_sum_max must lie in [0, {cap}], got {circle_sum_max}")
    start = time.perf_counter()
    report = VerificationReport("franklin", "enumeration", 1, circle_sum_max)
    expected_fixed = pentagonal_sums(circle_sum_max)
    for S in range(1, circle_sum_max + 1):
        fixed = []
        for mu in iter_strict_partitions(S):
            out = franklin_step(mu)
            if out.kind == "fixed":
                fixed.append(mu)
                if classify_staircase(mu) != (out.m, out.sign):
                    report.fail(S, f"staircase {(out.m, out.sign)}", mu)
                if sum(double_parts(mu)) != out.m * (3 * out.m + (1 if out.sign == "plus" else -1)):
                    report.fail(S, "even sum m(3m+-1)", sum(double_parts(mu)))
                continue
            image = out.image
            if sum(image) != S or not is_strict(image):
                report.fail(S, f"strict image of weight {S} from {mu}", image)
                continue
            if abs(len(image) - len(mu)) != 1:
                report.fail(S, f"part count {len(mu)} +- 1", f"{len(image)} for {mu} -> {image}")
            back = franklin_step(image)
            if back.kind != "fixed" and back.applied_case == out.applied_case:
                report.fail(S, f"opposite case for {image}", back.applied_case)
            if back.image != mu:
                report.fail(S, f"{mu} after two steps", back.image)
        want = sorted(staircase(m, sign) for m, sign in expected_fixed.get(S, []))
        if sorted(fixed) != want:
            report.fail(S, f"fixed points {want}", sorted(fixed))
        if fixed:
            report.notes.append(f"S={S}: fixed {', '.join(str(mu) for mu in sorted(fixed))}")
    report.elapsed = time.perf_counter() - start
    return report


def verify_bijection(
    c_max: int, d_max: int, *, table: CountTable | None = None, c_cap: int = 6, d_cap: int = 30
) -> VerificationReport:
    """Count law and both roundtrips over the grid c <= c_max, d <= d_max."""
    if not (0 <= c_max <= c_cap and 0 <= d_max <= d_cap):
        raise ValueError(f"grid must satisfy c <= {c_cap}, d <= {d_cap}; got ({c_max}, {d_max})")
    start = time.perf_counter()
    if table is None or table.N < d_max:
        table = p_table(d_max)
    report = VerificationReport("bijection", "enumeration", 0, d_max)
    for c in range(c_max + 1):
        T = bp.triangular(c)
        for d in range(d_max + 1):
            systems = list(bp.iter_systems(c, d))
            if len(systems) != table[d - T]:
                report.fail((c, d), f"p({d - T})={table[d - T]}", len(systems))
            for sys in systems:
                dd, t = bp.d_and_t(sys)
                if (dd, dd - t, dd + t) != (d, c, sys.weight):
                    report.fail((c, d), "d - t = c and d + t = n", (dd, t, sys.weight))
                variants = [sys]
                if c > 0:
                    variants.append(bp.BiPartitionSystem(sys.L, sys.R, "swapped"))
                for v in variants:
                    back = bp.residual_to_system(*bp.diagram_to_residual(bp.to_diagram(v)), v.orientation)
                    if back != v:
                        report.fail((c, d), v, back)
            if d < T:
                continue
            for mu in enumerate_partitions(d - T):
                dia = bp.to_diagram(bp.residual_to_system(c, mu))
                if bp.diagram_to_residual(dia) != (c, mu):
                    report.fail((c, d), (c, mu), bp.diagram_to_residual(dia))
    report.elapsed = time.perf_counter() - start
    return report


def verify_euler(
    n_max: int, *, table: CountTable | None = None, brute_max: int = 45
) -> VerificationReport:
    """The pentagonal recurrence over 1..n_max, and p(n) against brute force."""
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    start = time.perf_counter()
    if table is None or table.N < n_max:
        table = p_table(n_max)
    report = VerificationReport("euler", "series", 1, n_max)
    for n in range(1, n_max + 1):
        value = euler_alternating_check(n, table)
        if value != 0:
            report.fail(n, 0, value)
    for n in range(0, min(n_max, brute_max) + 1):
        brute = p_bruteforce(n)
        if table[n] != brute:
            report.fail(n, f"p({n})={brute}", table[n])
    report.elapsed = time.perf_counter() - start
    return report


def cross_check(n_max: int, *, cap: int = 40) -> VerificationReport:
    """Series coefficients against enumeration counts for 0 <= n <= n_max."""
    if not 0 <= n_max <= cap:
        raise ValueError(f"n_max must lie in [0, {cap}], got {n_max}")
    start = time.perf_counter()
    report = VerificationReport("crosscheck", "both", 0, n_max)
    E = E_series(n_max)
    po = overline_po_series(n_max)
    A = signed_difference_series("even_parts", n_max)
    B = signed_difference_series("all_parts", n_max)
    for n in range(n_max + 1):
        c = counts(n)
        listed = len(enumerate_E(n)) if n <= 25 else c.E
        checks = [
            ("E", E[n], c.E),
            ("E listed", E[n], listed),
            ("po", po[n], count_odd_overpartitions(n)),
            ("E0-E1", A[n], c.E0 - c.E1),
            ("E2-E3", B[n], c.E2 - c.E3),
        ]
        for name, series_value, enum_value in checks:
            if series_value != enum_value:
                report.fail(n, f"{name}={series_value} (series)", f"{enum_value} (enumeration)")
    report.elapsed = time.perf_counter() - start
    return report
