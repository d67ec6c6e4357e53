"""
Abstract base class for verification checks.

Every fixture in the fixtures document names a check. A check resolves the
monoids it needs, computes, compares against the expected values and returns
a CheckOutcome. Failures and crashes never propagate: a crashed check is a
failed outcome carrying the error message.
"""
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from time import perf_counter
from typing import Any, Dict, Optional, Tuple
import logging

from src.core.config import LabConfig
from src.monoids.spec import MonoidResolver


@dataclass
class VerifyContext:
    """Shared state for one verify run."""

    config: LabConfig
    resolver: MonoidResolver

    @classmethod
    def from_config(cls, config: LabConfig) -> 'VerifyContext':
        return cls(config, MonoidResolver.from_config(config))


@dataclass
class CheckOutcome:
    fixture_id: str
    section: str
    check: str
    passed: bool
    details: Dict[str, Any] = field(default_factory=dict)
    error: Optional[str] = None
    note: Optional[str] = None
    seconds: float = 0.0

    def to_dict(self) -> dict:
        data = {
            'id': self.fixture_id,
            'section': self.section,
            'check': self.check,
            'passed': self.passed,
            'details': self.details,
            'seconds': round(self.seconds, 3),
        }
        if self.error:
            data['error'] = self.error
        if self.note:
            data['note'] = self.note
        return data


class BaseCheck(ABC):
    """
    Abstract base class for all verification checks.

    Subclasses set `name` (the fixture's "check" value) and implement execute().
    """

    name: str = ''

    def __init__(self, fixture: Dict[str, Any], context: VerifyContext):
        self.fixture = fixture
        self.params: Dict[str, Any] = fixture.get('params', {})
        self.expected: Any = fixture.get('expected')
        self.context = context
        self.logger = logging.getLogger(f"{__name__}.{self.__class__.__name__}")

    @property
    def config(self) -> LabConfig:
        return self.context.config

    def monoid(self, spec: str):
        return self.context.resolver.resolve(spec)

    @abstractmethod
    def execute(self) -> Tuple[bool, Dict[str, Any]]:
        """
        Run the computation for this fixture.

        Returns:
            (passed, details) where details is JSON-serializable
        """
        pass

    def run(self) -> CheckOutcome:
        """Execute the check with logging and error capture."""
        fixture_id = self.fixture['id']
        self.logger.info("=" * 60)
        self.logger.info(f"▶ {self.__class__.__name__} RUN STARTED: {fixture_id}")

        outcome = CheckOutcome(
            fixture_id=fixture_id,
            section=self.fixture['section'],
            check=self.fixture['check'],
            passed=False,
            note=self.fixture.get('note'),
        )
        started = perf_counter()
        try:
            self.logger.info(f"--> Executing with params={self.params}")
            outcome.passed, outcome.details = self.execute()
            if outcome.passed:
                self.logger.info(f"[OK] {fixture_id} passed")
            else:
                self.logger.warning(f"[FAIL] {fixture_id}: {outcome.details}")
        except Exception as e:
            self.logger.exception(f"Error in {self.__class__.__name__}.run(): {e}")
            outcome.error = f"{type(e).__name__}: {e}"
        finally:
            outcome.seconds = perf_counter() - started
            self.logger.info(f"◼ {self.__class__.__name__} RUN COMPLETE ({outcome.seconds:.2f}s)")
            self.logger.info("=" * 60)
        return outcome


CHECKS: Dict[str, type] = {}


def register_check(cls: type) -> type:
    """Class decorator adding a check to the registry under its name."""
    if not cls.name:
        raise ValueError(f"{cls.__name__} has no check name")
    CHECKS[cls.name] = cls
    return cls


def check_for(fixture: Dict[str, Any], context: VerifyContext) -> BaseCheck:
    """
    Instantiate the check a fixture names.

    Raises:
        ValueError: If no check is registered under that name
    """
    name = fixture['check']
    if name not in CHECKS:
        raise ValueError(f"Unknown check '{name}' in fixture '{fixture['id']}'. Known: {sorted(CHECKS)}")
    return CHECKS[name](fixture, context)


