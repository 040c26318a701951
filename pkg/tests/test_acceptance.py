"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Every comparison is exact over Q(r); there are no tolerances.  Criteria 1-11
run the verification suites at their default sweep sizes, criterion 12 runs
the command line twice with different worker counts and compares bytes.
"""
import subprocess
import sys
import time

import pytest

from semisym.identities import suites

CRITERIA = {
    1: ("defining properties", ["defining"]),
    2: ("eigenvalues of X(t) and Y(t)", ["eigen"]),
    3: ("cut-off and commutativity", ["cutoff", "commute"]),
    4: ("triangularity, bigrading and product support", ["triangularity"]),
    5: ("extra vanishing", ["extra-vanishing"]),
    6: ("binomial formula, symmetry, involution, interpolation transform",
        ["duality", "interpol"]),
    7: ("evaluation formulas", ["evaluation"]),
    8: ("Pieri rules and three-variable examples", ["pieri"]),
    9: ("closed forms and the degree 3 table", ["closed-forms"]),
    10: ("Jack comparisons and elementary formulas", ["jack"]),
    11: ("integrality probe (report only)", ["integrality"]),
}


def _report(capsys, number, title, passed, detail=""):
    with capsys.disabled():
        verdict = "PASS" if passed else "FAIL"
        print(f"\ncriterion {number}: {verdict}  {title}{detail}")


def _failures(report):
    out = []
    for s in report["suites"]:
        for case in s["cases"]:
            if not case["passed"]:
                out.append((s["name"], case["case"], case["witness"][:1]))
    return out


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number, capsys):
    title, names = CRITERIA[number]
    start = time.perf_counter()
    failures, counts = [], []
    for name in names:
        report = suites.run(name, {}, jobs=1)
        failures += _failures(report)
        counts += [s["passed"] + s["failed"] for s in report["suites"]]
    elapsed = time.perf_counter() - start
    passed = not failures and all(counts)
    detail = f"  ({sum(counts)} cases, {elapsed:.1f}s)"
    _report(capsys, number, title, passed, detail)
    assert all(counts), "a suite produced no cases"
    assert not failures, failures[:5]


def _verify_all(jobs):
    cmd = [sys.executable, "-m", "semisym.cli", "verify", "all", "--report", "json",
           "--jobs", str(jobs)]
    return subprocess.run(cmd, capture_output=True, timeout=1800)


def test_criterion_12_determinism(capsys):
    first = _verify_all(1)
    second = _verify_all(3)
    passed = (first.returncode == second.returncode == 0
              and first.stdout == second.stdout and len(first.stdout) > 0)
    _report(capsys, 12, "byte-identical verify report across worker counts", passed,
            f"  ({len(first.stdout)} bytes)")
    assert first.returncode == 0, first.stderr.decode()
    assert first.stdout == second.stdout
