"""
JSON dumps of monoids, verdicts and reports.
"""
from typing import Any, Dict
import json
import logging

from src.core.errors import NotationError
from src.monoids.finite_monoid import FiniteMonoid
from src.monoids.rees import idempotents, is_j_trivial, j_order_covers

logger = logging.getLogger(__name__)


def monoid_to_dict(M: FiniteMonoid) -> Dict[str, Any]:
    """Labels, table (as indices), identity, zero, idempotents and J-order covers."""
    j_trivial = is_j_trivial(M)
    covers = j_order_covers(M) if j_trivial else []
    return {
        'provenance': M.provenance,
        'size': len(M),
        'labels': list(M.labels),
        'identity': None if M.identity is None else M.labels[M.identity],
        'zero': None if M.zero is None else M.labels[M.zero],
        'table': [list(row) for row in M.table],
        'idempotents': [M.labels[e] for e in sorted(idempotents(M))],
        'j_trivial': j_trivial,
        'j_order_covers': [[M.labels[a], M.labels[b]] for a, b in covers],
    }


def monoid_from_dict(data: Dict[str, Any]) -> FiniteMonoid:
    """
    Rebuild a monoid from monoid_to_dict output.

    Raises:
        NotationError: If required keys are missing
    """
    missing = {'labels', 'table'} - set(data)
    if missing:
        raise NotationError(f"Monoid dump lacks {sorted(missing)}")
    return FiniteMonoid.from_rows(data['labels'], data['table'], provenance=data.get('provenance', ''))


class JsonFormatter:
    """Serialise anything with a to_dict() (or plain data) as stable JSON."""

    def format(self, payload: Any) -> str:
        if isinstance(payload, FiniteMonoid):
            payload = monoid_to_dict(payload)
        elif hasattr(payload, 'to_dict'):
            payload = payload.to_dict()
        return json.dumps(payload, indent=2, ensure_ascii=False)
