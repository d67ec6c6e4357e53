"""
Rees quotient monoids M_tau(W) and their structural queries.

The elements of M_tau(W) are the tau-words below some member of W together
with a zero. Two elements multiply to the normal form of their product when
that lies in the closure, and to zero otherwise.
"""
from typing import Dict, List, Set, Tuple
import logging
import re

from src.core.congruence import CongruenceKind, Tag
from src.core.errors import KindMismatchError
from src.core.rewrite import ExtWord, diamond
from src.core.tau_order import TauWord, TauWordSet, closure
from src.monoids.finite_monoid import FiniteMonoid

logger = logging.getLogger(__name__)

IDENTITY_LABEL = '1'
ZERO_LABEL = '0'
_STARRED_LETTER = re.compile(r'[a-z][0-9]*\+')


def _product(kind: CongruenceKind, u: ExtWord, v: ExtWord) -> ExtWord:
    if kind.tag is Tag.TRIVIAL:
        return u + v
    return diamond(kind, u, v)


def build(kind: CongruenceKind, W: TauWordSet) -> FiniteMonoid:
    """
    Construct M_tau(W) as an explicit table.

    Elements are ordered: identity, the nonempty closure members in shortlex
    order, then the zero. When W is empty the result is the one-element
    monoid {0}.

    Args:
        kind: Congruence of the tau-words
        W: Generating tau-words

    Returns:
        FiniteMonoid with labels given by the canonical names

    Raises:
        KindMismatchError: If W was built for another kind
        UnsupportedKindError: If the kind has no closure
    """
    if W.kind != kind:
        raise KindMismatchError(f"Tau-word set is of kind {W.kind}, expected {kind}")
    provenance = f"M_{kind}({', '.join(W.labels())})"
    below = closure(W)
    if not len(below):
        return FiniteMonoid((ZERO_LABEL,), ((0,),), identity=0, zero=0, provenance=provenance)

    elements: List[TauWord] = list(below.members)
    nonempty = [w for w in elements if not w.is_empty]
    canons: List[ExtWord] = [ExtWord(W.members[0].alphabet, ())] + [w.canon for w in nonempty]
    labels = [IDENTITY_LABEL] + [w.label for w in nonempty] + [ZERO_LABEL]
    zero = len(labels) - 1
    position: Dict[ExtWord, int] = {c: i for i, c in enumerate(canons)}

    rows: List[Tuple[int, ...]] = []
    for u in canons:
        row = [position.get(_product(kind, u, v), zero) for v in canons]
        row.append(zero)
        rows.append(tuple(row))
    rows.append(tuple([zero] * len(labels)))

    monoid = FiniteMonoid(tuple(labels), tuple(rows), identity=0, zero=zero, provenance=provenance)
    logger.info(f"[OK] Built {provenance}: {len(monoid)} elements")
    return monoid


def idempotents(M: FiniteMonoid) -> Set[int]:
    """All e with e*e = e."""
    return {e for e in range(len(M)) if M.table[e][e] == e}


def is_j_trivial(M: FiniteMonoid) -> bool:
    """True iff distinct elements generate distinct principal two-sided ideals."""
    ideals = [M.two_sided_ideal(x) for x in range(len(M))]
    return len(set(ideals)) == len(ideals)


def j_order_covers(M: FiniteMonoid) -> List[Tuple[int, int]]:
    """
    Covering pairs (lower, upper) of the J-order x <= y iff MxM is inside MyM.

    Only meaningful for J-trivial monoids, where the J-order is a partial order.
    """
    ideals = [M.two_sided_ideal(x) for x in range(len(M))]
    n = len(M)
    below = {
        (x, y) for x in range(n) for y in range(n) if x != y and ideals[x] < ideals[y]
    }
    covers = []
    for x, y in sorted(below):
        if not any((x, z) in below and (z, y) in below for z in range(n)):
            covers.append((x, y))
    return covers


def has_star_idempotents(M: FiniteMonoid) -> bool:
    """
    True iff the idempotents of a built monoid are exactly 1, 0 and the single starred letters.

    Holds for every M_tau(W) under gamma, lambda and rho.
    """
    labels = {M.labels[e] for e in idempotents(M)}
    expected = {label for label in M.labels if _STARRED_LETTER.fullmatch(label)}
    expected |= {label for label in (IDENTITY_LABEL, ZERO_LABEL) if label in M.labels}
    return labels == expected
