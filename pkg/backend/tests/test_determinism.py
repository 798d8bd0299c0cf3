"""
Determinism Tests for the Workbench

These tests verify that every experiment is DETERMINISTIC:
- Same automaton + bounds -> same witness search hits, in the same order
- Same catalogue entry -> same suite results
- Same seed -> same random property samples
- Same automaton -> same nucleus and same minimization
"""

import sys
import os
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from common.catalog import get_catalogue_service
from common.catalog.verification import property_checks
from common.contraction_lab import nucleus, search_witness
from common.element_algebra import format_element, format_word
from common.mealy_core import minimize, parse_automaton


ODOMETER = """
name: odometer
alphabet: 2
state a: 0->1@e ; 1->0@a
state e: 0->0@e ; 1->1@e
"""

RUNS = 5


def test_same_search_hits_every_time():
    """Witness search on 861 must list the same hits in the same order."""
    print("Test 1: Same search hits (5 runs)")
    automaton = get_catalogue_service().get(861).automaton

    results = []
    for _ in range(RUNS):
        hits = search_witness(automaton, 1, 3)
        results.append(tuple((format_element(r.g), format_word(r.v), r.verdict.value) for r in hits))

    assert len(set(results)) == 1, f"FAIL: Got {len(set(results))} different hit lists"
    print(f"PASSED: {len(results[0])} hits every run")


def test_same_suite_results_every_time():
    print("Test 2: Same suite results for 887 (5 runs)")
    service = get_catalogue_service()

    results = []
    for _ in range(RUNS):
        suite = service.run_suite(887)
        results.append(tuple((r.label, r.passed, r.actual) for r in suite.results))

    assert len(set(results)) == 1, "FAIL: suite results differ between runs"
    print(f"PASSED: {len(results[0])} checks every run")


def test_same_seed_same_samples():
    """Seeded property samples repeat exactly."""
    print("Test 3: Same seed -> same samples")
    automaton = get_catalogue_service().get(749).automaton

    results = set()
    for _ in range(RUNS):
        checks = property_checks(automaton, samples=25, seed=42)
        results.add(tuple(c.label for c in checks))

    assert len(results) == 1, "FAIL: seeded samples differ"
    print("PASSED")


def test_same_nucleus_every_time():
    print("Test 4: Same nucleus of the odometer")
    automaton = parse_automaton(ODOMETER)

    results = set()
    for _ in range(RUNS):
        report = nucleus(automaton)
        results.add((report.status.value, report.size, report.rounds, tuple(format_element(g) for g in report.elements)))

    assert len(results) == 1, "FAIL: nucleus differs between runs"
    print(f"PASSED: {results.pop()[1]} elements")


def test_same_minimization_every_time():
    print("Test 5: Same minimization of 882")
    automaton = get_catalogue_service().get(882).automaton

    results = set()
    for _ in range(RUNS):
        result = minimize(automaton)
        results.add((tuple(result.class_of), result.merged, result.automaton.states))

    assert len(results) == 1, "FAIL: minimization differs between runs"
    print("PASSED")


def run_all_tests():
    """Run all determinism tests."""
    print("\n" + "=" * 60)
    print("DETERMINISM TESTS FOR THE WORKBENCH")
    print("=" * 60 + "\n")

    tests = [
        test_same_search_hits_every_time,
        test_same_suite_results_every_time,
        test_same_seed_same_samples,
        test_same_nucleus_every_time,
        test_same_minimization_every_time,
    ]

    passed = 0
    failed = 0

    for test in tests:
        try:
            test()
            passed += 1
        except AssertionError as e:
            print(f"FAILED: {e}")
            failed += 1
        except Exception as e:
            print(f"ERROR: {e}")
            failed += 1
        print()

    print("=" * 60)
    print(f"RESULTS: {passed} passed, {failed} failed")
    print("=" * 60)

    return failed == 0


if __name__ == '__main__':
    success = run_all_tests()
    sys.exit(0 if success else 1)
