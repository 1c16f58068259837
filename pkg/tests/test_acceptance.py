"""The fifteen acceptance criteria, one test each.

Every test prints a single PASS/FAIL line (collected again in the terminal
summary) with the elapsed time against the criterion's budget.
"""

import time

import pytest

from signtope import reproduce
from signtope.cli import main

RESULTS: dict[int, str] = {}


def run_criterion(number, fn, budget):
    t0 = time.perf_counter()
    rows = fn()
    secs = time.perf_counter() - t0
    bad = [r for r in rows if not r.ok]
    ok = not bad and secs <= budget
    line = (f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {len(rows) - len(bad)}/{len(rows)} rows, "
            f"{secs:.1f}s / {budget:g}s")
    if bad:
        line += "  first failure: " + f"{bad[0].item}: expected {bad[0].expected}, got {bad[0].computed}"
    RESULTS[number] = line
    print(line)
    return ok, rows, secs


def _check(number):
    return next((n, fn, budget) for n, _, fn, budget, _ in reproduce.CHECKS if n == number)


@pytest.mark.parametrize("number", [1, 2, 3, 4, 5, 7, 8, 9, 10, 11, 12, 13, 14])
def test_criterion(number):
    ok, rows, secs = run_criterion(*_check(number))
    assert all(r.ok for r in rows), [r for r in rows if not r.ok]
    assert secs <= _check(number)[2]


def test_criterion_6_vc_omega_sandwich():
    # literal form omega/2 <= vc; random_total(1) gives omega=1, vc=0
    def literal():
        return [r for r in reproduce.check_vc_omega() if r.check.startswith("omega/2")]
    ok, rows, _ = run_criterion(6, literal, 600)
    assert ok


def test_criterion_6_floor_form():
    rows = [r for r in reproduce.check_vc_omega() if r.check.startswith("floor")]
    assert rows and all(r.ok for r in rows)


def test_criterion_15_full_chain(capsys):
    def full():
        rows = reproduce.check_full_chain()
        with capsys.disabled():
            code = main(["reproduce", "all"])
        return rows + [reproduce.Row("reproduce all", "exit code", "0", str(code), code == 0)]
    ok, rows, _ = run_criterion(15, full, 1200)
    assert ok


def pytest_terminal_summary_lines():
    return [RESULTS[k] for k in sorted(RESULTS)]
