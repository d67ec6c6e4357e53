#!/usr/bin/env python3
"""
Check a verify report written by `python -m src.main verify --report FILE`.

The report path is taken from the first argument, or from VERIFY_REPORT_FILE
when no argument is given. Sections listed in REQUIRED_SECTIONS (comma
separated, e.g. "s4,s8") must have been run.

Exit Codes:
    0: Every check in the report passed
    1: Missing, malformed or failing report
"""
import json
import os
import sys
from pathlib import Path

REQUIRED_KEYS = ('fixtures_version', 'section', 'seed', 'passed', 'summary', 'results')
MAX_REPORT_BYTES = 50_000_000


def main():
    path = Path(sys.argv[1] if len(sys.argv) > 1 else os.getenv('VERIFY_REPORT_FILE', 'reports/verify.json'))

    try:
        validate_report_file_structure(path)
        report = parse_report_file(path)
    except Exception as e:
        print(f"Report validation failed: {e}", file=sys.stderr)
        sys.exit(1)

    required = [s.strip() for s in os.getenv('REQUIRED_SECTIONS', '').split(',') if s.strip()]
    missing = [s for s in required if s not in report['summary'].get('sections', {})]
    if missing:
        print(f"Report does not cover section(s): {', '.join(missing)}", file=sys.stderr)
        sys.exit(1)

    failed = [r['id'] for r in report['results'] if not r.get('passed')]
    if failed or not report['passed']:
        print(f"{len(failed)} check(s) failed: {', '.join(failed)}", file=sys.stderr)
        sys.exit(1)

    summary = report['summary']
    print(
        f"Verified (fixtures v{report['fixtures_version']}, section {report['section']}, "
        f"seed {report['seed']}, {summary['passed']}/{summary['total']} passed)"
    )
    sys.exit(0)


def validate_report_file_structure(path: Path) -> None:
    """
    Raises:
        FileNotFoundError: If the file doesn't exist
        ValueError: If the file is empty or too large
    """
    if not path.exists():
        raise FileNotFoundError(f"Report not found: {path}")
    size = path.stat().st_size
    if size == 0:
        raise ValueError("Report is empty")
    if size > MAX_REPORT_BYTES:
        raise ValueError(f"Report is too large: {size} bytes")


def parse_report_file(path: Path) -> dict:
    """
    Load the report and check that its summary matches its results.

    Raises:
        ValueError: If keys are missing or the counts disagree
    """
    report = json.loads(path.read_text(encoding='utf-8'))
    missing = [key for key in REQUIRED_KEYS if key not in report]
    if missing:
        raise ValueError(f"Report lacks keys: {', '.join(missing)}")

    results = report['results']
    summary = report['summary']
    if summary.get('total') != len(results):
        raise ValueError(f"Summary total {summary.get('total')} but {len(results)} results")
    passed = sum(1 for r in results if r.get('passed'))
    if summary.get('passed') != passed:
        raise ValueError(f"Summary passed {summary.get('passed')} but {passed} results passed")
    return report


if __name__ == "__main__":
    main()
