import json

import numpy as np

from wreathembed.errors import InputFormatError

PASS = 'pass'
FAIL = 'fail'
HYPOTHESIS_NOT_SATISFIED = 'hypothesis_not_satisfied'

HYPOTHESIS_PREFIX = 'hypothesis: '


def _plain(value):
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.bool_):
        return bool(value)
    return value


class VerificationReport:
    """Outcome of one verification run: named checks plus the derived quantities they produced.

    The verdict is computed from the checks alone. A run whose only failures are checks named
    with HYPOTHESIS_PREFIX did not meet the hypothesis of the statement being verified.
    """

    def __init__(self, proposition, inputs=None, checks=None, derived=None):
        self.proposition = proposition
        self.inputs = _plain(inputs or {})
        self.checks = [dict(check) for check in (checks or [])]
        self.derived = _plain(derived or {})

    def add_check(self, name, passed, detail=''):
        self.checks.append({'name': name, 'pass': bool(passed), 'detail': detail})
        return bool(passed)

    def add_hypothesis(self, name, passed, detail=''):
        return self.add_check(HYPOTHESIS_PREFIX + name, passed, detail)

    def add_derived(self, name, value, operation):
        self.derived[name] = {'value': _plain(value), 'operation': operation}

    def failed_checks(self):
        return [check for check in self.checks if not check['pass']]

    @property
    def verdict(self):
        failed = self.failed_checks()
        if not failed:
            return PASS
        if all(check['name'].startswith(HYPOTHESIS_PREFIX) for check in failed):
            return HYPOTHESIS_NOT_SATISFIED
        return FAIL

    def to_dict(self):
        return {'proposition': self.proposition, 'inputs': self.inputs, 'checks': self.checks,
                'derived': self.derived, 'verdict': self.verdict}

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def __eq__(self, other):
        if not isinstance(other, VerificationReport):
            return False
        return self.to_dict() == other.to_dict()

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return 'VerificationReport(%s, verdict=%s)' % (self.proposition, self.verdict)


def report_from_dict(data):
    try:
        report = VerificationReport(data['proposition'], data.get('inputs'), data['checks'], data.get('derived'))
    except (KeyError, TypeError) as err:
        raise InputFormatError('not a verification report: %s' % err)
    if 'verdict' in data and data['verdict'] != report.verdict:
        raise InputFormatError('stored verdict %s contradicts the checks (%s)' % (data['verdict'], report.verdict))
    return report


def report_from_json(text):
    try:
        data = json.loads(text)
    except ValueError as err:
        raise InputFormatError('report is not valid JSON: %s' % err)
    return report_from_dict(data)


def print_report_in_text_format(report):
    print('Proposition %s' % report.proposition)
    if report.inputs:
        print('Inputs: %s' % ', '.join('%s=%s' % (k, report.inputs[k]) for k in sorted(report.inputs)))
    for check in report.checks:
        status = 'PASS' if check['pass'] else 'FAIL'
        detail = ' (%s)' % check['detail'] if check['detail'] else ''
        print('[%s] %s%s' % (status, check['name'], detail))
    for name in sorted(report.derived):
        entry = report.derived[name]
        print('%s = %s  [%s]' % (name, entry['value'], entry['operation']))
    print('Verdict: %s' % report.verdict)


def print_reports(reports, outfmt='text'):
    if outfmt == 'json':
        if len(reports) == 1:
            print(reports[0].to_json())
        else:
            print(json.dumps([r.to_dict() for r in reports], indent=2, sort_keys=True))
        return
    for i, report in enumerate(reports):
        if i:
            print('')
        print_report_in_text_format(report)


def print_report(report, outfmt='text'):
    print_reports([report], outfmt)
