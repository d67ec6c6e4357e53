"""
Runner for the verification suite.

Loads the versioned fixtures document, registers one check per fixture of the
requested section and runs them all. A crashing check is recorded as failed
and the run moves on to the next one.
"""
from pathlib import Path
from typing import Callable, Dict, List, Optional
import logging

from src.core.config import LabConfig
from src.identities.nfb import LIMITATION
from src.utils.validation import load_fixture_document
from src.verify import checks  # noqa: F401  (registers the check classes)
from src.verify.base_check import CheckOutcome, VerifyContext, check_for

logger = logging.getLogger(__name__)

SECTIONS = ('s4', 's5', 's7', 's8')
ALL = 'all'


class VerifyRunner:
    """
    Runs the fixtures of one section (or all of them) and collects a report.
    """

    def __init__(self, config: LabConfig, fixtures_file: Optional[Path] = None):
        self.config = config
        self.fixtures_file = Path(fixtures_file or config.fixtures_file)
        self.document = load_fixture_document(self.fixtures_file)
        self.context = VerifyContext.from_config(config)
        self._checks: List[Callable[[], CheckOutcome]] = []
        self.outcomes: List[CheckOutcome] = []

    def register_check(self, check_runner: Callable[[], CheckOutcome]) -> None:
        self._checks.append(check_runner)

    def select(self, section: str = ALL) -> int:
        """
        Register the checks of a section.

        Raises:
            ValueError: If the section is unknown
        """
        if section != ALL and section not in SECTIONS:
            raise ValueError(f"Unknown section '{section}'. Expected one of: {ALL}, {', '.join(SECTIONS)}")
        fixtures = [f for f in self.document['fixtures'] if section == ALL or f['section'] == section]
        for fixture in fixtures:
            self.register_check(check_for(fixture, self.context).run)
        logger.info(f"Registered {len(fixtures)} check(s) for section {section}")
        return len(fixtures)

    def _run_all_checks(self) -> None:
        if not self._checks:
            logger.warning("No checks registered. Nothing to run.")
            return

        for idx, check_runner in enumerate(self._checks, 1):
            logger.info(f"Executing check {idx}/{len(self._checks)}...")
            self.outcomes.append(check_runner())

    def run(self, section: str = ALL) -> Dict:
        """
        Run a section and return the report document.

        Returns:
            JSON-serializable report; report['passed'] is True iff every check passed
        """
        logger.info("=" * 60)
        logger.info(f"▶ VERIFY STARTED: section={section} seed={self.config.seed}")
        logger.info("=" * 60)

        self.select(section)
        self._run_all_checks()
        report = self.report(section)

        failed = [o.fixture_id for o in self.outcomes if not o.passed]
        if failed:
            logger.warning(f"{len(failed)} check(s) failed: {', '.join(failed)}")
        logger.info("=" * 60)
        logger.info(f"◼ VERIFY COMPLETE: {report['summary']['passed']}/{report['summary']['total']} passed")
        logger.info("=" * 60)
        return report

    def report(self, section: str) -> Dict:
        by_section: Dict[str, Dict[str, int]] = {}
        for outcome in self.outcomes:
            counts = by_section.setdefault(outcome.section, {'passed': 0, 'failed': 0})
            counts['passed' if outcome.passed else 'failed'] += 1
        passed = sum(o.passed for o in self.outcomes)
        return {
            'fixtures_version': self.document['version'],
            'section': section,
            'seed': self.config.seed,
            'passed': passed == len(self.outcomes),
            'summary': {'total': len(self.outcomes), 'passed': passed, 'sections': by_section},
            'limitations': [
                LIMITATION,
                "Equational equivalence is checked only for the stated number of variables and word length.",
            ],
            'results': [o.to_dict() for o in self.outcomes],
        }
