"""Cross-module identity suites.

Each suite exercises one of the consistency statements tying the closed
forms, the Pfaffian engine and the limit-series solver together.  Suites
return a SuiteResult with the first counterexample on failure; the CLI
``verify`` command and the acceptance tests both run them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator, List, Optional, Tuple

from . import formulas, lagrangian, limit_series, theta_ring
from .bn_numerics import VanishingSequence, expected_dim_V, expected_dim_V_eta
from .errors import PrymBNError
from .lagrangian import StrictPartition, staircase
from .limit_series import (
    RAMIFIED_X_PLUS_Y,
    UNRAMIFIED_DELTA1,
    LimitProblem,
    solve_unique,
    w_locus_expected_dim,
)


@dataclass(frozen=True)
class SuiteResult:
    name: str
    cases: int
    passed: bool
    counterexample: Optional[str] = None


def strict_partitions(max_weight: int) -> Iterator[StrictPartition]:
    """All strict partitions with 1 <= |lambda| <= max_weight."""

    def rec(remaining: int, max_part: int, prefix: Tuple[int, ...]):
        if prefix:
            yield StrictPartition(prefix)
        for p in range(min(remaining, max_part), 0, -1):
            yield from rec(remaining - p, p - 1, prefix + (p,))

    yield from rec(max_weight, max_weight, ())


def vanishing_sequences(max_total: int) -> Iterator[VanishingSequence]:
    """All sequences a with |a| + r + 1 <= max_total, via their rank partitions."""
    for lam in strict_partitions(max_total):
        yield VanishingSequence(tuple(p - 1 for p in reversed(lam.parts)))


def suite_engine_oracle(max_weight: int = 24) -> SuiteResult:
    """Pfaffian recursion against the closed product formula."""
    cases = 0
    for lam in strict_partitions(max_weight):
        cases += 1
        engine = lagrangian.q_tilde(lam, formulas.chern_series_W(lam.weight))
        oracle = lagrangian.eval_identity(lam)
        if engine.coeff != oracle or engine.exponent != lam.weight:
            return SuiteResult(
                "engine_oracle", cases, False,
                f"lambda={lam.parts}: engine {engine.coeff}, oracle {oracle}",
            )
    return SuiteResult("engine_oracle", cases, True)


def suite_pointed_equivalence(max_weight: int = 24) -> SuiteResult:
    """Engine class of a vanishing sequence against the pointed closed form."""
    cases = 0
    for a in vanishing_sequences(max_weight):
        cases += 1
        engine = lagrangian.lagrangian_class_pointed(a)
        closed = formulas.twisted_pointed_class(a)
        if engine != closed:
            return SuiteResult(
                "pointed_equivalence", cases, False,
                f"a={a.entries}: engine {engine}, closed form {closed}",
            )
    return SuiteResult("pointed_equivalence", cases, True)


def suite_staircase_relation(max_r: int = 6) -> SuiteResult:
    """Q-tilde at the staircase equals 2^(r+1) times the unpointed coefficient."""
    cases = 0
    for r in range(max_r + 1):
        cases += 1
        lam = staircase(r + 1)
        engine = lagrangian.q_tilde(lam, formulas.chern_series_W(lam.weight))
        closed = formulas.twisted_class(r)
        if engine.coeff != 2 ** (r + 1) * closed.coeff or engine.exponent != closed.exponent:
            return SuiteResult(
                "staircase_relation", cases, False,
                f"r={r}: engine {engine.coeff}, 2^(r+1) x closed {2 ** (r + 1) * closed.coeff}",
            )
    return SuiteResult("staircase_relation", cases, True)


def suite_unramified_reproduction(max_r: int = 8) -> SuiteResult:
    """P-tilde at the staircase, rewritten in xi, equals the P+/P- class."""
    cases = 0
    for r in range(1, max_r + 1):
        cases += 1
        lam = staircase(r)
        engine = theta_ring.substitute_theta_prime_as_2xi(
            lagrangian.p_tilde(lam, formulas.chern_series_W(lam.weight))
        )
        closed = formulas.unramified_class(r)
        if engine != closed:
            return SuiteResult(
                "unramified_reproduction", cases, False,
                f"r={r}: engine {engine}, closed form {closed}",
            )
    return SuiteResult("unramified_reproduction", cases, True)


def dimension_zero_genus(k: int, r: int) -> int:
    """The genus at which the twisted locus of rank r is zero-dimensional."""
    return (r + 1) * (r + 2) // 2 + 1 - k


def suite_count_integrality(max_r: int = 5) -> SuiteResult:
    """Counts at the dimension-zero genus are positive integers (k = 1, 2)."""
    cases = 0
    for k in (1, 2):
        for r in range(max_r + 1):
            g = dimension_zero_genus(k, r)
            if g < 2:
                continue  # below the genus-2 domain of the torsor table
            cases += 1
            space = theta_ring.make_space(theta_ring.RAMIFIED_TWISTED, g, k)
            try:
                n = formulas.count_points(formulas.twisted_class(r), space)
            except PrymBNError as exc:
                return SuiteResult(
                    "count_integrality", cases, False, f"k={k} r={r} g={g}: {exc}"
                )
            if n <= 0:
                return SuiteResult(
                    "count_integrality", cases, False, f"k={k} r={r} g={g}: count {n}"
                )
    return SuiteResult("count_integrality", cases, True)


def suite_limit_solver(max_g: int = 12, max_r: int = 4) -> SuiteResult:
    """solve_unique agrees with the closed forms wherever s >= 0."""
    cases = 0
    for flavor in (UNRAMIFIED_DELTA1, RAMIFIED_X_PLUS_Y):
        for g in range(2, max_g + 1):
            for r in range(max_r + 1):
                p = LimitProblem(flavor, g, r)
                if p.s < 0:
                    continue
                cases += 1
                try:
                    solved = solve_unique(p)
                except PrymBNError as exc:
                    return SuiteResult(
                        "limit_solver", cases, False, f"{flavor} g={g} r={r}: {exc}"
                    )
                if flavor == UNRAMIFIED_DELTA1:
                    closed = limit_series.prym_limit_vanishing(g, r)
                else:
                    closed = limit_series.prym_limit_vanishing_ramified(g, r)
                if solved != closed:
                    return SuiteResult(
                        "limit_solver", cases, False,
                        f"{flavor} g={g} r={r}: {solved.entries} != {closed.entries}",
                    )
    return SuiteResult("limit_solver", cases, True)


def suite_w_consistency(max_g: int = 30, max_r: int = 6) -> SuiteResult:
    """Pointed W-locus dimension matches the unramified expected dimension."""
    cases = 0
    for g in range(2, max_g + 1):
        for r in range(max_r + 1):
            a = VanishingSequence(tuple(2 * i for i in range(r + 1)))
            if a[-1] > g + r - 1:
                continue  # vanishing orders out of range for the degree
            cases += 1
            got = w_locus_expected_dim(g - 1, g + r - 1, a)
            want = expected_dim_V(g, 0, r).value
            if got != want:
                return SuiteResult(
                    "w_consistency", cases, False, f"g={g} r={r}: {got} != {want}"
                )
    return SuiteResult("w_consistency", cases, True)


def suite_degree_table(max_g: int = 30) -> SuiteResult:
    """Top self-intersections match the calibration table."""
    cases = 0
    for g in range(2, max_g + 1):
        for flavor, k in ((theta_ring.UNRAMIFIED_PM, 0),
                          (theta_ring.RAMIFIED_TWISTED, 1),
                          (theta_ring.RAMIFIED_TWISTED, 2)):
            cases += 1
            space = theta_ring.make_space(flavor, g, k)
            gen = theta_ring.XI if flavor == theta_ring.UNRAMIFIED_PM else theta_ring.THETA_PRIME
            top = theta_ring.degree(
                theta_ring.ThetaClass(Fraction(1), space.dim, gen), space
            )
            if top != space.theta_top:
                return SuiteResult(
                    "degree_table", cases, False, f"{flavor} g={g} k={k}: {top}"
                )
    return SuiteResult("degree_table", cases, True)


ALL_SUITES: List[Callable[..., SuiteResult]] = [
    suite_engine_oracle,
    suite_pointed_equivalence,
    suite_staircase_relation,
    suite_unramified_reproduction,
    suite_count_integrality,
    suite_limit_solver,
    suite_w_consistency,
    suite_degree_table,
]


def run_all(max_weight: int = 24, max_g: int = 12, max_r: int = 4) -> List[SuiteResult]:
    """Run every suite at the given bounds, in a fixed order."""
    return [
        suite_engine_oracle(max_weight),
        suite_pointed_equivalence(max_weight),
        suite_staircase_relation(max_r),
        suite_unramified_reproduction(max(max_r, 1)),
        suite_count_integrality(max_r),
        suite_limit_solver(max_g, max_r),
        suite_w_consistency(max_g, max_r),
        suite_degree_table(max_g),
    ]
