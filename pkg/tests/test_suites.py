from curvekit.suites import FAIL, PASS, CheckRecord, CheckResult, SuiteReport, checks_of


def report():
    records = [
        CheckRecord('core-block-weights', 'anchor', CheckResult(PASS, {'weight': 2, 'skip': [1]})),
        CheckRecord('detectors-octagon', 'anchor', CheckResult(FAIL, {}, {'pair': [1, 2]}, {'edges': 12})),
    ]
    return SuiteReport('all', records, {})


def test_report_lines():
    lines = report().lines()
    width = len('core-block-weights')
    assert lines[0] == 'check'.ljust(width) + '  ' + 'status'.ljust(10) + '  detail'
    assert lines[1] == 'core-block-weights  pass        weight=2'
    assert lines[2] == 'detectors-octagon   fail'
    assert lines[3] == '1 passed, 1 failed, 0 unresolved'


def test_report_certificates():
    r = report()
    assert r.exit_code == 1
    assert r.certificates() == [('detectors-octagon', {'edges': 12})]
    checks = r.to_json()['checks']
    assert 'certificate' not in checks[0]
    assert checks[1]['certificate'] == 'detectors-octagon.json'
    assert checks[1]['reproducer'] == {'pair': [1, 2]}


def test_registry():
    ids = [c.id for c in checks_of('all')]
    assert len(ids) == len(set(ids))
    assert {'rigidset-completion', 'detectors-triple-adjacency', 'core-braid-relations'} <= set(ids)
    assert all(c.suite == 'supports' for c in checks_of('supports'))
