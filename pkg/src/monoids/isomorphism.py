"""
Isomorphism search between small finite monoids.

Elements are fingerprinted by invariants preserved under isomorphism, a small
generating set of the source is chosen, and images of the generators are
found by backtracking; the rest of the map follows from the products.
"""
from collections import Counter
from typing import Dict, List, Optional, Sequence, Set, Tuple
import logging

from src.monoids.constructions import dual
from src.monoids.finite_monoid import FiniteMonoid, Morphism

logger = logging.getLogger(__name__)

Signature = Tuple[bool, bool, bool, int, int, int, Tuple[int, int]]


def element_signatures(M: FiniteMonoid) -> List[Signature]:
    """Per-element invariants: idempotent, identity, zero, ideal sizes, index and period."""
    return [
        (
            M.table[x][x] == x,
            x == M.identity,
            x == M.zero,
            len(M.left_ideal(x)),
            len(M.right_ideal(x)),
            len(M.two_sided_ideal(x)),
            M.index_and_period(x),
        )
        for x in range(len(M))
    ]


def _right_closure(M: FiniteMonoid, gens: Sequence[int]) -> Set[int]:
    """Everything reachable from gens (and the identity) by right multiplication."""
    found: Set[int] = set(gens)
    if M.identity is not None:
        found.add(M.identity)
    frontier = list(found)
    while frontier:
        fresh = []
        for x in frontier:
            for g in gens:
                y = M.table[x][g]
                if y not in found:
                    found.add(y)
                    fresh.append(y)
        frontier = fresh
    return found


def generating_set(M: FiniteMonoid) -> List[int]:
    """
    Greedy generating set.

    Elements high in the J-order are tried first; an element is kept when it
    is not yet generated by the ones already chosen.
    """
    order = sorted(range(len(M)), key=lambda x: (-len(M.two_sided_ideal(x)), x))
    gens: List[int] = []
    reached = _right_closure(M, gens)
    for x in order:
        if len(reached) == len(M):
            break
        if x in reached:
            continue
        gens.append(x)
        reached = _right_closure(M, gens)
    return gens


def _extend(
    M1: FiniteMonoid, M2: FiniteMonoid, gens: Sequence[int], images: Sequence[int]
) -> Optional[Tuple[int, ...]]:
    mapping: Dict[int, int] = dict(zip(gens, images))
    if M1.identity is not None:
        if M1.identity in mapping and mapping[M1.identity] != M2.identity:
            return None
        mapping[M1.identity] = M2.identity
    frontier = list(mapping)
    while frontier:
        fresh = []
        for x in frontier:
            for g, h in zip(gens, images):
                y = M1.table[x][g]
                image = M2.table[mapping[x]][h]
                if y in mapping:
                    if mapping[y] != image:
                        return None
                else:
                    mapping[y] = image
                    fresh.append(y)
        frontier = fresh
    if len(mapping) != len(M1) or len(set(mapping.values())) != len(M1):
        return None
    result = tuple(mapping[x] for x in range(len(M1)))
    if Morphism(M1, M2, result).is_homomorphism():
        return result
    return None


def isomorphic(M1: FiniteMonoid, M2: FiniteMonoid) -> Optional[Morphism]:
    """
    Find an isomorphism M1 -> M2.

    Returns:
        A product-preserving bijection (identity to identity), or None if none exists
    """
    if len(M1) != len(M2) or (M1.identity is None) != (M2.identity is None):
        return None
    sig1, sig2 = element_signatures(M1), element_signatures(M2)
    if Counter(sig1) != Counter(sig2):
        logger.debug(f"{M1.provenance} and {M2.provenance} differ in element invariants")
        return None

    gens = generating_set(M1)
    candidates = [[y for y in range(len(M2)) if sig2[y] == sig1[g]] for g in gens]

    chosen: List[int] = []

    def search(depth: int) -> Optional[Tuple[int, ...]]:
        if depth == len(gens):
            return _extend(M1, M2, gens, chosen)
        for y in candidates[depth]:
            if y in chosen:
                continue
            chosen.append(y)
            found = search(depth + 1)
            chosen.pop()
            if found is not None:
                return found
        return None

    mapping = search(0)
    if mapping is None:
        return None
    logger.debug(f"[OK] {M1.provenance} is isomorphic to {M2.provenance}")
    return Morphism(M1, M2, mapping)


def anti_isomorphic(M1: FiniteMonoid, M2: FiniteMonoid) -> Optional[Morphism]:
    """An isomorphism from M1 onto the dual of M2, if any."""
    return isomorphic(M1, dual(M2))


def extend_generator_map(M1: FiniteMonoid, M2: FiniteMonoid, images: Dict[int, int]) -> Optional[Morphism]:
    """
    The isomorphism determined by prescribed generator images, if there is one.

    The keys of `images` must generate M1.
    """
    gens = list(images)
    mapping = _extend(M1, M2, gens, [images[g] for g in gens])
    return None if mapping is None else Morphism(M1, M2, mapping)
