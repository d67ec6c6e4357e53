# tests/conftest.py
"""
Shared pytest fixtures for all tests.
"""
import json
import shutil
import tempfile
from pathlib import Path

import pytest

from src.core.config import LabConfig
from src.monoids.spec import BUNDLED_PRESENTATIONS, MonoidResolver

REPO_ROOT = Path(__file__).resolve().parent.parent


@pytest.fixture
def temp_dir():
    """Create temporary directory for test files."""
    with tempfile.TemporaryDirectory() as tmpdir:
        yield Path(tmpdir)


@pytest.fixture
def lab_config(temp_dir, monkeypatch):
    """A LabConfig rooted in a temporary project with the bundled presentations."""
    monkeypatch.setenv('PRESENTATIONS_DIR', str(BUNDLED_PRESENTATIONS))
    monkeypatch.setenv('ENABLE_FILE_LOGGING', 'False')
    monkeypatch.setenv('LOG_LEVEL', 'INFO')
    monkeypatch.setenv('CONFLUENCE_SAMPLES', '50')
    monkeypatch.setenv('CONFLUENCE_ORDERS', '3')

    (temp_dir / 'data').mkdir(parents=True, exist_ok=True)
    (temp_dir / 'logs').mkdir(parents=True, exist_ok=True)

    return LabConfig.from_env(project_root=temp_dir)


@pytest.fixture
def write_fixtures(lab_config):
    """Write a fixtures document to the config's fixtures file."""
    def _write(fixtures, version=1):
        lab_config.fixtures_file.write_text(json.dumps({'version': version, 'fixtures': fixtures}))
        return lab_config.fixtures_file
    return _write


@pytest.fixture
def bundled_fixtures(lab_config):
    """Copy the real fixtures document into the temporary project."""
    shutil.copy(REPO_ROOT / 'data' / 'verify_fixtures.json', lab_config.fixtures_file)
    return lab_config.fixtures_file


@pytest.fixture(scope='session')
def resolver():
    """One resolver per session so that every spec is built once."""
    return MonoidResolver()


@pytest.fixture(scope='session')
def m_j(resolver):
    """The lambda monoid of atba+sb+."""
    return resolver.resolve('lambda:atba+sb+')


@pytest.fixture(scope='session')
def m_i(resolver):
    """The 19-element lambda monoid of ba+sb+."""
    return resolver.resolve('lambda:ba+sb+')


@pytest.fixture(scope='session')
def b0_one(resolver):
    return resolver.resolve('pres:B0^1')


@pytest.fixture(scope='session')
def a_one(resolver):
    return resolver.resolve('pres:A^1')
