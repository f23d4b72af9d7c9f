"""Parameter grids for the identity checks, shared by the CLI and the tests."""

from __future__ import annotations

from .exact import PiValue
from .identities import (
    NUMERIC_TOLERANCE,
    IdentityReport,
    functional_relation,
    functional_relation_printed,
    harmonic_product,
    merca_forms,
    value_at_two,
    value_at_zero,
    vanishing_at_negative_even,
)
from .mzv import Family, OracleConfig, diagonal_closed_form, diagonal_oracle, diagonal_recurrence
from .zeta import zeta_exact_even

__all__ = ["SUITES", "run_suite"]

ORACLE_RELATIVE_TOLERANCE = 1e-5


def functional_relation_suite(max_depth: int = 6, tolerance: float = NUMERIC_TOLERANCE,
                              exact_args=(2, 4), numeric_args=(2.5, 3.0, 3.7)) -> list[IdentityReport]:
    reports = []
    for star in (False, True):
        for r in range(1, max_depth + 1):
            for s in exact_args:
                reports.append(functional_relation(r, s, star))
            for s in numeric_args:
                rep = functional_relation(r, float(s), star)
                rep.passed = rep.residual <= tolerance
                reports.append(rep)
    reports.append(functional_relation_printed(2, 2))
    return reports


def merca_suite(max_k: int = 10) -> list[IdentityReport]:
    reports = []
    for k in range(1, max_k + 1):
        target = zeta_exact_even(k)
        for index, form in enumerate(merca_forms(k), 1):
            reports.append(IdentityReport(f"merca-form-{index}", {"k": k}, form, target, 0.0 if form == target
                                          else abs(float(form) - float(target)), form == target))
    return reports


def three_way_suite(max_depth: int = 6, args=(2.0, 2.5, 3.0, 4.0), oracle_n: int = 5000,
                    tolerance: float = NUMERIC_TOLERANCE) -> list[IdentityReport]:
    """Closed form vs recurrence (absolute tolerance) vs truncated-series oracle.

    The oracle comparison allows the sum of both reported error bounds and
    additionally demands a relative gap of at most 1e-5.
    """
    reports = []
    config = OracleConfig(truncation=oracle_n)
    for family in Family:
        for r in range(1, max_depth + 1):
            for s in args:
                cf = diagonal_closed_form(family, r, s)
                rec = diagonal_recurrence(family, r, s)
                orc = diagonal_oracle(family, r, s, config)
                residual = abs(cf.value - rec.value)
                oracle_gap = abs(cf.value - orc.value)
                oracle_rel = oracle_gap / abs(cf.value) if cf.value else oracle_gap
                within_bound = oracle_gap <= orc.error_bound + cf.error_bound
                passed = residual <= tolerance and within_bound and oracle_rel <= ORACLE_RELATIVE_TOLERANCE
                reports.append(IdentityReport(
                    "three-way", {"family": family.value, "r": r, "s": s, "oracle_n": oracle_n},
                    cf.value, rec.value, residual, passed,
                    extra={"oracle": orc.value, "oracle_bound": orc.error_bound,
                           "closed_form_bound": cf.error_bound, "oracle_gap": oracle_gap,
                           "oracle_relative_gap": oracle_rel}))
    return reports


def harmonic_suite(args=(2.0, 2.7, 3.0), tolerance: float = NUMERIC_TOLERANCE) -> list[IdentityReport]:
    reports = []
    for s in args:
        for star in (False, True):
            rep = harmonic_product(s, star)
            rep.passed = rep.residual <= tolerance
            reports.append(rep)
    return reports


def values_at_two_suite(max_depth: int = 8) -> list[IdentityReport]:
    reports = []
    for family in Family:
        for r in range(1, max_depth + 1):
            expected = value_at_two(family, r)
            got = diagonal_closed_form(family, r, 2, "exact").value
            reports.append(IdentityReport("value-at-two", {"family": family.value, "r": r}, got, expected,
                                          0.0, got == expected))
    return reports


def values_at_zero_suite(max_depth: int = 20) -> list[IdentityReport]:
    reports = []
    for family in Family:
        for r in range(1, max_depth + 1):
            expected = PiValue.constant(value_at_zero(family, r))
            got = diagonal_closed_form(family, r, 0, "exact").value
            reports.append(IdentityReport("value-at-zero", {"family": family.value, "r": r}, got, expected,
                                          0.0, got == expected))
    return reports


def vanishing_suite(max_depth: int = 6, max_k: int = 3) -> list[IdentityReport]:
    return [vanishing_at_negative_even(family, r, k)
            for family in Family for r in range(1, max_depth + 1) for k in range(1, max_k + 1)]


SUITES = {
    "functional-relation": functional_relation_suite,
    "merca": merca_suite,
    "three-way": three_way_suite,
    "harmonic": harmonic_suite,
    "values-at-two": values_at_two_suite,
    "values-at-zero": values_at_zero_suite,
    "vanishing": vanishing_suite,
}


def run_suite(name: str, *, max_depth: int | None = None, max_k: int | None = None,
              oracle_n: int | None = None, tolerance: float | None = None) -> list[IdentityReport]:
    """Run one named suite (or ``all``) with optional overrides."""
    if name == "all":
        out = []
        for key in SUITES:
            out.extend(run_suite(key, max_depth=max_depth, max_k=max_k, oracle_n=oracle_n, tolerance=tolerance))
        return out
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}")
    kwargs = {}
    if max_depth is not None and name not in ("merca", "harmonic"):
        kwargs["max_depth"] = max_depth
    if max_k is not None and name in ("merca", "vanishing"):
        kwargs["max_k"] = max_k
    if oracle_n is not None and name == "three-way":
        kwargs["oracle_n"] = oracle_n
    if tolerance is not None and name in ("functional-relation", "three-way", "harmonic"):
        kwargs["tolerance"] = tolerance
    return SUITES[name](**kwargs)
