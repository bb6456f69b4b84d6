import math

import pytest

from hypertype.errors import OutOfDomain, TruncationError, UsageError
from hypertype.suites import Case, SuiteReport, _run_case, run_suite, run_suites, suite_names


def test_suite_names():
    assert suite_names() == ['spot', 'gamma', 'kummer', 'symmetry', 'ladders', 'connection', 'polynomials',
                             'representations', 'asymptotics', 'degenerate']


@pytest.mark.parametrize('name', ['spot', 'gamma', 'symmetry', 'kummer', 'asymptotics', 'degenerate'])
def test_suite_passes(name):
    report = run_suite(name, seed=3)
    assert report.cases > 0
    assert report.passed, [r.to_dict() for r in report.failures]


def test_workers_give_the_same_results():
    serial = run_suite('spot', seed=9)
    threaded = run_suite('spot', seed=9, workers=4)
    assert [r.residual for r in serial.results] == [r.residual for r in threaded.results]


def test_domain_errors_skip_a_case():
    def outside():
        raise OutOfDomain("|z| > 1")

    result = _run_case(Case('outside', outside), None)
    assert result.passed and result.skipped.startswith('OutOfDomain')
    assert math.isnan(result.residual)


def test_other_errors_fail_a_case():
    def broken():
        raise TruncationError("no decay")

    result = _run_case(Case('broken', broken), None)
    assert not result.passed
    assert result.to_dict()['residual'] is None


def test_tolerance_only_raises_thresholds():
    case = Case('loose', lambda: 1e-6, 1e-9)
    assert not _run_case(case, None).passed
    assert _run_case(case, 1e-5).passed
    assert _run_case(Case('tight', lambda: 1e-12, 1e-9), 1e-15).threshold == 1e-9


def test_expected_failures():
    assert _run_case(Case('wrong contour', lambda: 0.5, 1e-3, expect_failure=True), None).passed
    assert not _run_case(Case('wrong contour', lambda: 1e-6, 1e-3, expect_failure=True), None).passed


def test_report_summary():
    results = (_run_case(Case('ok', lambda: 1e-12), None), _run_case(Case('bad', lambda: 1.0), None))
    data = SuiteReport('demo', results).to_dict(verbose=True)
    assert data['cases'] == 2
    assert data['failures'] == 1
    assert data['worst_residual'] == 1.0
    assert [c['name'] for c in data['failed_cases']] == ['bad']
    assert len(data['results']) == 2


def test_unknown_suite():
    with pytest.raises(UsageError):
        run_suites(['everything'])
