"""
Atomic JSON persistence for reports and monoid dumps.

Files are written to a temporary file in the target directory and moved into
place, so a crashed run never leaves a half-written report behind.
"""
import json
import os
import shutil
import tempfile
from pathlib import Path
from typing import Any, Optional
import logging

logger = logging.getLogger(__name__)


class ReportWriter:
    """Reads and writes one JSON document."""

    def __init__(self, path: Path):
        self.path = Path(path)

    def write(self, data: Any) -> Path:
        """
        Save data as indented JSON using an atomic replace.

        Raises:
            OSError: If the file cannot be written
        """
        self.path.parent.mkdir(parents=True, exist_ok=True)
        temp_fd, temp_path = tempfile.mkstemp(dir=self.path.parent, suffix='.tmp', text=True)
        try:
            with os.fdopen(temp_fd, 'w', encoding='utf-8') as f:
                json.dump(data, f, indent=2, ensure_ascii=False)
                f.write('\n')
            shutil.move(temp_path, self.path)
        except Exception:
            if Path(temp_path).exists():
                Path(temp_path).unlink()
            logger.error(f"Failed to write {self.path}")
            raise
        logger.info(f"[OK] Wrote {self.path}")
        return self.path

    def load(self) -> Optional[Any]:
        """The stored document, or None when missing or corrupted."""
        if not self.path.exists():
            logger.info(f"No report at {self.path}")
            return None
        try:
            with open(self.path, 'r', encoding='utf-8') as f:
                return json.load(f)
        except json.JSONDecodeError as e:
            logger.error(f"Corrupted JSON in {self.path}: {e}")
            return None
