import pytest

from strengthlab.exceptions import BudgetError
from strengthlab.verify import (
    SUITES,
    EnumerationSuite,
    RamseySuite,
    StrengthSuite,
    TablesSuite,
    TheoremSuite,
    run_suites,
)


def test_enumeration_suite(service, logger):
    report = EnumerationSuite(6, service=service, logger=logger).run()
    assert report.passed, report.failures
    assert report.details == {'order_1': 1, 'order_2': 2, 'order_3': 4, 'order_4': 11, 'order_5': 34, 'order_6': 156}


def test_strength_suite_counts_classes(service, logger):
    report = StrengthSuite(6, service=service, logger=logger).run()
    assert report.passed, report.failures
    assert sum(report.details.values()) == 156 + 34 + 11 + 4 + 2


def test_theorem_suite(service, logger):
    report = TheoremSuite(5, service=service, logger=logger).run()
    assert report.passed, report.failures
    assert report.checks > 100


def test_ramsey_suite(service, logger):
    report = RamseySuite(7, service=service, logger=logger).run()
    assert report.passed, report.failures
    assert report.details['r_4_4'] == 1044


def test_tables_suite(service, logger):
    report = TablesSuite(5, service=service, logger=logger).run()
    assert report.passed, report.failures
    assert set(report.details) == {'fmax_3', 'fmax_4', 'fmax_5'}


def test_failures_are_recorded(service, logger, monkeypatch):
    monkeypatch.setattr('strengthlab.verify.KNOWN_CLASS_COUNTS', {1: 1, 2: 3})
    report = EnumerationSuite(2, service=service, logger=logger).run()
    assert not report.passed
    assert report.failures == ['order 2: 2 classes, expected 3']


def test_max_order_is_bounded():
    with pytest.raises(BudgetError, match='max order'):
        EnumerationSuite(8)


def test_run_suites(service, logger):
    reports = run_suites('all', 3, service=service, logger=logger)
    assert [report.suite for report in reports] == list(SUITES)
    assert all(report.passed for report in reports)
    with pytest.raises(ValueError, match='Unknown suite'):
        run_suites('everything')


def test_theorem_suite_pads_every_order_with_three_vertices(service, logger, monkeypatch):
    padded = set()

    def record(graph, m, budget):
        padded.add((graph.order, m))
        return True

    monkeypatch.setattr('strengthlab.verify.strength_isolated_invariance_check', record)
    report = TheoremSuite(4, service=service, logger=logger).run()
    assert report.passed, report.failures
    assert padded == {(n, m) for n in range(2, 5) for m in (1, 2, 3)}


def test_strength_suite_at_order_seven(service, logger):
    report = StrengthSuite(7, service=service, logger=logger).run()
    assert report.passed, report.failures
    assert report.details['order_7'] == 1044
