"""
Validation of the verify fixtures document.

Checks that the fixtures file exists and that every fixture carries the keys
the runner relies on, before any check is executed.
"""
from pathlib import Path
from typing import Any, Dict, List
import json
import logging

logger = logging.getLogger(__name__)

REQUIRED_FIXTURE_KEYS = ('id', 'section', 'check', 'params')


def validate_fixture_keys(
    fixture: Dict[str, Any],
    required_keys: List[str] = REQUIRED_FIXTURE_KEYS,
    context: str = "Fixture") -> None:
    """
    Validate that a fixture contains all required keys.

    Args:
        fixture: Fixture dictionary to validate
        required_keys: Keys that must be present
        context: Description used in error messages

    Raises:
        ValueError: If any required keys are missing
    """
    missing_keys = set(required_keys) - set(fixture)

    if missing_keys:
        available = ", ".join(sorted(fixture))
        missing = ", ".join(sorted(missing_keys))
        error_msg = (
            f"{context} missing required keys: {missing}. "
            f"Available keys: {available}."
        )
        logger.error(error_msg)
        raise ValueError(error_msg)


def load_fixture_document(path: Path) -> Dict[str, Any]:
    """
    Load and validate the fixtures file.

    Raises:
        FileNotFoundError: If the file does not exist
        ValueError: If the JSON is malformed, lacks a version, or a fixture lacks keys
    """
    path = Path(path)
    if not path.is_file():
        raise FileNotFoundError(f"Fixtures file not found: {path}")
    try:
        with open(path, 'r', encoding='utf-8') as f:
            document = json.load(f)
    except json.JSONDecodeError as e:
        raise ValueError(f"Corrupted JSON in {path}: {e}") from e

    if 'version' not in document or not isinstance(document.get('fixtures'), list):
        raise ValueError(f"{path} must contain 'version' and a 'fixtures' list")

    seen = set()
    for position, fixture in enumerate(document['fixtures'], 1):
        validate_fixture_keys(fixture, context=f"Fixture {position} in {path.name}")
        if fixture['id'] in seen:
            raise ValueError(f"Duplicate fixture id '{fixture['id']}' in {path.name}")
        seen.add(fixture['id'])

    logger.debug(f"{path.name} validation passed - {len(seen)} fixtures, version {document['version']}")
    return document
