"""
Plain text Cayley tables.
"""
from typing import Optional
import logging

import pandas as pd

from src.monoids.finite_monoid import FiniteMonoid
from src.monoids.rees import idempotents, is_j_trivial

logger = logging.getLogger(__name__)


class TableFormatter:
    """
    Renders a monoid as a header plus its Cayley table.
    """

    def frame(self, M: FiniteMonoid) -> pd.DataFrame:
        """Cayley table with row and column labels; entry (a, b) is ab."""
        labels = list(M.labels)
        rows = [[labels[c] for c in row] for row in M.table]
        return pd.DataFrame(rows, index=labels, columns=labels)

    def format(self, M: FiniteMonoid, title: Optional[str] = None) -> str:
        separator = "=" * 70
        text = f"{separator}\n"
        text += f"{title or M.provenance}\n"
        text += f"{len(M)} elements; identity {self._label(M, M.identity)}; zero {self._label(M, M.zero)}\n"
        text += f"idempotents: {', '.join(M.labels[e] for e in sorted(idempotents(M)))}\n"
        text += f"J-trivial: {'yes' if is_j_trivial(M) else 'no'}\n"
        text += f"{separator}\n"
        text += self.frame(M).to_string()
        return text + "\n"

    @staticmethod
    def _label(M: FiniteMonoid, index: Optional[int]) -> str:
        return 'none' if index is None else M.labels[index]
