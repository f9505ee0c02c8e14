"""Acceptance suite: one test per criterion, one printed pass/fail line each.

Criteria 5 and 9 assert, among other things, the tabulated floating-pair
bracket band that ends at n = 48.  That band is numerically false at
n = 48 (the floating value 29.307287 sits below the tabulated lower
bracket 29.310844; the true band ends at 46), so those two assertions
fail and are expected to keep failing: the table is reproduced as stated,
not adjusted to the numbers.
"""
import math
import random
import time

from sidigraph import (
    check_mixed_chain,
    check_same_sign_chain,
    certify_monotone,
    energy,
    energy_cycle,
    eigenvalues,
    expected_floating_brackets,
    extremal_pairs,
    iota_energy,
    iota_energy_cycle,
    iota_energy_of_graph,
    join_with_arc,
    locate_floating_pair,
    make_cycle,
    monotonicity_claims,
    ordered_sequence,
    splice_gap,
)
from sidigraph.cli import main
from sidigraph.orderings import SAME_SIGN
from sidigraph.render import ordering_to_csv, ordering_to_svg


def report(number: int, passed: bool, detail: str) -> None:
    print(f"[acceptance] criterion {number}: {'PASS' if passed else 'FAIL'} - {detail}")


def test_criterion_1_extremal_27(capsys):
    start = time.perf_counter()
    code = main(["extremal", "27"])
    elapsed = time.perf_counter() - start
    out = capsys.readouterr().out
    maximum, minimum = extremal_pairs(27)
    ok = (
        code == 0
        and abs(maximum.value - 17.32) <= 0.01
        and abs(maximum.value - (2.0 + 2.0 / math.sin(math.pi / 24))) <= 1e-12
        and minimum.value == 0.0
        and "max (C2-,C24-)" in out
        and "min (C2+,C2+) 0.000000" in out
        and elapsed < 1.0
    )
    with capsys.disabled():
        report(1, ok, f"extremal 27 in {elapsed:.3f}s, max {maximum.value:.6f}, min {minimum.value}")
    assert ok


def test_criterion_2_closed_form_vs_spectral_oracle(capsys):
    start = time.perf_counter()
    checks = 0
    worst = 0.0
    for n in range(2, 51):
        for sign in (1, -1):
            spectrum = eigenvalues(make_cycle(n, sign), use_cycle_fast_path=False)
            worst = max(worst, abs(energy_cycle(n, sign) - energy(spectrum)))
            worst = max(worst, abs(iota_energy_cycle(n, sign) - iota_energy(spectrum)))
            checks += 2
    elapsed = time.perf_counter() - start
    ok = checks == 196 and worst <= 1e-8 and elapsed < 5.0
    with capsys.disabled():
        report(2, ok, f"{checks} checks, worst difference {worst:.2e}, {elapsed:.2f}s")
    assert ok


def test_criterion_3_same_sign_pattern_22_to_60(capsys):
    mismatches = [
        (n, r.detail) for n in range(22, 61) if not (r := check_same_sign_chain(n)).passed
    ]
    with capsys.disabled():
        report(3, not mismatches, f"{39 - len(mismatches)}/39 budgets match, ties included")
    assert not mismatches, mismatches


def test_criterion_4_mixed_pattern_6_to_60(capsys):
    mismatches = [
        (n, r.detail) for n in range(6, 61) if not (r := check_mixed_chain(n)).passed
    ]
    with capsys.disabled():
        report(4, not mismatches, f"{55 - len(mismatches)}/55 budgets match")
    assert not mismatches, mismatches


def test_criterion_5_floating_brackets_stated_bands(capsys):
    bands = list(range(10, 17, 2)) + list(range(18, 23, 2)) + list(range(24, 31, 2)) \
        + list(range(32, 39, 2)) + list(range(40, 49, 2))
    mismatches = []
    for n in bands:
        above, below = expected_floating_brackets(n)
        found = locate_floating_pair(n)
        if found.above.pair != above or found.below.pair != below:
            mismatches.append(
                f"n={n}: stated between {above} and {below}, "
                f"numerically between {found.above.pair} and {found.below.pair}"
            )
    with capsys.disabled():
        report(
            5,
            not mismatches,
            f"{len(bands) - len(mismatches)}/{len(bands)} stated brackets reproduced"
            + (f"; {'; '.join(mismatches)}" if mismatches else ""),
        )
    assert not mismatches, (
        "the stated bracket band ending at 48 is numerically false: " + "; ".join(mismatches)
    )


def test_criterion_6_splice_margin_at_22(capsys):
    gap = splice_gap(22)
    ok = abs(gap - 1.463) <= 0.001 and gap < 2.0 * math.sqrt(3.0) - 2.0
    with capsys.disabled():
        report(6, ok, f"2*csc(pi/18) - 2*cot(pi/16) = {gap:.6f} < {2 * math.sqrt(3) - 2:.6f}")
    assert ok


def test_criterion_7_monotonicity_certification(capsys):
    failures = []
    for n in range(6, 101, 2):
        for function_id, interval, direction in monotonicity_claims(n):
            result = certify_monotone(function_id, n, interval, direction, 10000)
            if not result.passed:
                failures.append((n, function_id, interval))
    with capsys.disabled():
        report(7, not failures, f"claims over even n in [6,100] at 10^4 grid points, {len(failures)} failures")
    assert not failures, failures


def test_criterion_8_additivity_for_random_joined_pairs(capsys):
    rng = random.Random(20260810)
    worst = 0.0
    for _ in range(200):
        l1, l2 = rng.randrange(2, 21, 2), rng.randrange(2, 21, 2)
        s1, s2 = rng.choice((1, -1)), rng.choice((1, -1))
        bridge = rng.choice((1, -1))
        g1, g2 = make_cycle(l1, s1), make_cycle(l2, s2)
        joined = join_with_arc(g1, g2, rng.randrange(l1), rng.randrange(l2), bridge)
        expected = iota_energy_cycle(l1, s1) + iota_energy_cycle(l2, s2)
        worst = max(worst, abs(iota_energy_of_graph(joined) - expected))
    ok = worst <= 1e-8
    with capsys.disabled():
        report(8, ok, f"200 random joined pairs, worst additivity error {worst:.2e}")
    assert ok


def test_criterion_9_determinism_and_verify_gate(capsys):
    seq = ordered_sequence(27, SAME_SIGN)
    csv_ok = ordering_to_csv(seq) == ordering_to_csv(ordered_sequence(27, SAME_SIGN))
    svg_ok = ordering_to_svg(seq) == ordering_to_svg(ordered_sequence(27, SAME_SIGN))
    start = time.perf_counter()
    code = main(["verify", "--n-max", "60"])
    elapsed = time.perf_counter() - start
    capsys.readouterr()
    ok = csv_ok and svg_ok and code == 0 and elapsed < 60.0
    with capsys.disabled():
        report(
            9,
            ok,
            f"csv deterministic {csv_ok}, svg deterministic {svg_ok}, "
            f"verify --n-max 60 exit {code} in {elapsed:.1f}s",
        )
    assert csv_ok and svg_ok
    assert elapsed < 60.0
    assert code == 0, (
        "verify --n-max 60 exits 1: it faithfully reports the floating-pair "
        "bracket mismatch at n=48 (stated band ends at 48, true band at 46)"
    )
