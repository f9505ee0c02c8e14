"""Batch verification suite behind the CLI `verify` command.

Runs every applicable consistency check for budgets up to n_max: ordering
patterns against the numeric sort, block splice inequalities, floating-pair
brackets, grid monotonicity, closed forms against the root-finder spectrum,
and extremal identification.  Failures are collected, not raised.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import orderings, trig
from .cycle_formulas import energy_cycle, iota_energy_cycle
from .graphs import make_cycle
from .spectra import eigenvalues, energy, iota_energy

ORACLE_TOL = 1e-8


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def _from_report(name: str, report) -> CheckResult:
    return CheckResult(name=name, passed=report.passed, detail=report.detail)


def run_verification(
    n_max: int,
    tie_tol: float = orderings.TIE_TOL,
    grid_points: int = 10000,
) -> list[CheckResult]:
    """Every applicable check for budgets up to n_max, in a fixed order."""
    if n_max < 4:
        raise ValueError(f"n_max must be >= 4, got {n_max}")
    results: list[CheckResult] = []

    for n in range(22, n_max + 1):
        results.append(
            _from_report(f"same-sign chain n={n}", orderings.check_same_sign_chain(n, tie_tol))
        )
    for n in range(6, n_max + 1):
        results.append(
            _from_report(f"mixed chain n={n}", orderings.check_mixed_chain(n, tie_tol))
        )
    for n in range(6, n_max + 1, 2):
        results.append(
            _from_report(f"exact-total chain n={n}", orderings.check_exact_total_chain(n))
        )
    for n in range(22, n_max + 1, 2):
        results.append(
            _from_report(f"block splice n={n}", orderings.check_splice_inequalities(n))
        )
    for n in range(10, min(n_max, 48) + 1, 2):
        expected = orderings.expected_floating_brackets(n)
        if expected is None:
            continue
        report = orderings.locate_floating_pair(n)
        above, below = expected
        ok = (
            report.above is not None
            and report.below is not None
            and report.above.pair == above
            and report.below.pair == below
        )
        detail = ""
        if not ok:
            got_above = report.above.pair if report.above else None
            got_below = report.below.pair if report.below else None
            detail = f"expected between {above} and {below}, got {got_above} and {got_below}"
        results.append(CheckResult(f"floating-pair bracket n={n}", ok, detail))
    for n in range(6, n_max + 1, 2):
        for function_id, interval, direction in trig.monotonicity_claims(n):
            report = trig.certify_monotone(function_id, n, interval, direction, grid_points)
            results.append(
                CheckResult(
                    f"monotone {function_id} [{interval[0]:g},{interval[1]:g}] n={n}",
                    report.passed,
                    "" if report.passed else f"worst adjacent difference {report.worst_adjacent_difference:.3g}",
                )
            )
    for n in range(2, n_max + 1):
        for sign in (1, -1):
            spectrum = eigenvalues(make_cycle(n, sign), use_cycle_fast_path=False)
            d_energy = abs(energy_cycle(n, sign) - energy(spectrum))
            d_iota = abs(iota_energy_cycle(n, sign) - iota_energy(spectrum))
            worst = max(d_energy, d_iota)
            results.append(
                CheckResult(
                    f"cycle closed form vs spectrum n={n} sign={'+' if sign > 0 else '-'}",
                    worst <= ORACLE_TOL,
                    "" if worst <= ORACLE_TOL else f"difference {worst:.3g}",
                )
            )
    for n in range(4, n_max + 1):
        try:
            orderings.extremal_pairs(n)
            results.append(CheckResult(f"extremal pairs n={n}", True))
        except RuntimeError as exc:
            results.append(CheckResult(f"extremal pairs n={n}", False, str(exc)))
    return results
