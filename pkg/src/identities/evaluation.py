"""
Identity satisfaction in finite monoids.

Small substitution spaces are evaluated at once with numpy: every variable
gets a column holding its value in each substitution, and a word is folded
through the multiplication table column by column. Larger spaces are searched
depth first, abandoning a branch as soon as both sides are known to be zero.
"""
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple
import logging

import numpy as np

from src.identities.identity import Identity
from src.monoids.finite_monoid import FiniteMonoid

logger = logging.getLogger(__name__)

DEFAULT_VECTOR_LIMIT = 2_000_000


@dataclass(frozen=True)
class SatisfactionResult:
    """Outcome of a satisfaction check; falsy when the identity fails."""

    holds: bool
    witness: Optional[Dict[str, str]] = None
    values: Optional[Tuple[str, str]] = None
    notes: Tuple[str, ...] = field(default=())

    def __bool__(self) -> bool:
        return self.holds

    def to_dict(self) -> dict:
        return {
            'holds': self.holds,
            'witness': self.witness,
            'values': list(self.values) if self.values else None,
        }


def substitution_columns(M: FiniteMonoid, nvars: int) -> List[np.ndarray]:
    """
    Value of each of nvars variables across all |M|^nvars substitutions.

    Substitutions are ordered lexicographically, the first variable most significant.
    """
    n = len(M)
    dtype = M.array.dtype
    columns = []
    for j in range(nvars):
        shape = [1] * nvars
        shape[j] = n
        values = np.arange(n, dtype=dtype).reshape(shape)
        columns.append(np.broadcast_to(values, (n,) * nvars).reshape(-1))
    return columns


def word_vector(M: FiniteMonoid, letters: Sequence[int], columns: Sequence[np.ndarray], size: int) -> np.ndarray:
    """Values of the term function of a word over the substitutions of `columns`."""
    table = M.array
    if not letters:
        if M.identity is None:
            raise ValueError(f"The empty word has no value in {M.provenance}, which has no identity")
        return np.full(size, M.identity, dtype=table.dtype)
    result = columns[letters[0]]
    for x in letters[1:]:
        result = table[result, columns[x]]
    return np.ascontiguousarray(result)


def extend_vector(M: FiniteMonoid, prefix: np.ndarray, column: np.ndarray) -> np.ndarray:
    return M.array[prefix, column]


def _decode(index: int, n: int, nvars: int) -> List[int]:
    digits = []
    for _ in range(nvars):
        digits.append(index % n)
        index //= n
    return digits[::-1]


def _result(M: FiniteMonoid, identity: Identity, variables: Sequence[int], values: Sequence[int]) -> SatisfactionResult:
    assignment = dict(zip(variables, values))
    lhs = M.evaluate(assignment[x] for x in identity.lhs.letters)
    rhs = M.evaluate(assignment[x] for x in identity.rhs.letters)
    names = identity.alphabet.letters
    witness = {names[x]: M.labels[v] for x, v in assignment.items()}
    return SatisfactionResult(False, witness, (M.labels[lhs], M.labels[rhs]))


def _satisfies_vectorised(M: FiniteMonoid, identity: Identity, variables: Tuple[int, ...]) -> SatisfactionResult:
    k = len(variables)
    columns = substitution_columns(M, k)
    size = len(M) ** k
    position = {x: j for j, x in enumerate(variables)}
    lhs = word_vector(M, [position[x] for x in identity.lhs.letters], columns, size)
    rhs = word_vector(M, [position[x] for x in identity.rhs.letters], columns, size)
    differ = np.flatnonzero(lhs != rhs)
    if differ.size == 0:
        return SatisfactionResult(True)
    return _result(M, identity, variables, _decode(int(differ[0]), len(M), k))


def _known_zero(M: FiniteMonoid, side: Sequence[int], assignment: Dict[int, int]) -> bool:
    """Some run of assigned letters already multiplies to zero."""
    run: Optional[int] = None
    for x in side:
        value = assignment.get(x)
        if value is None:
            run = None
            continue
        run = value if run is None else M.table[run][value]
        if run == M.zero:
            return True
    return False


def _satisfies_search(M: FiniteMonoid, identity: Identity, variables: Tuple[int, ...]) -> SatisfactionResult:
    lhs, rhs = identity.lhs.letters, identity.rhs.letters
    order: List[int] = []
    for x in lhs + rhs:
        if x not in order:
            order.append(x)
    assignment: Dict[int, int] = {}
    elements = range(len(M))
    prune = M.zero is not None

    def search(depth: int) -> Optional[List[int]]:
        if depth == len(order):
            if M.evaluate(assignment[x] for x in lhs) != M.evaluate(assignment[x] for x in rhs):
                return [assignment[x] for x in variables]
            return None
        x = order[depth]
        for value in elements:
            assignment[x] = value
            if prune and _known_zero(M, lhs, assignment) and _known_zero(M, rhs, assignment):
                continue
            found = search(depth + 1)
            if found is not None:
                return found
        del assignment[x]
        return None

    found = search(0)
    if found is None:
        return SatisfactionResult(True)
    return _result(M, identity, variables, found)


def _lift(M: FiniteMonoid, index: int, result: SatisfactionResult) -> SatisfactionResult:
    """Turn a witness in factor `index` of a product into a witness in the product."""
    factor = M.factors[index]
    other = M.factors[1 - index]
    n_other = len(other)
    witness = {}
    for name, label in result.witness.items():
        a = factor.index(label)
        pair = a * n_other + other.identity if index == 0 else other.identity * len(factor) + a
        witness[name] = M.labels[pair]
    return SatisfactionResult(False, witness, None, (f"falsified in factor {factor.provenance}",))


def satisfies(M: FiniteMonoid, identity: Identity, vector_limit: int = DEFAULT_VECTOR_LIMIT) -> SatisfactionResult:
    """
    Decide whether M satisfies u ~ v for every substitution of its variables.

    Direct products that remember their factors are checked factor by factor.

    Args:
        M: Finite monoid
        identity: Identity to check
        vector_limit: Largest substitution count evaluated at once with numpy

    Returns:
        SatisfactionResult; on failure it carries a falsifying substitution
    """
    if identity.is_trivial:
        return SatisfactionResult(True)
    if M.factors and all(f.identity is not None for f in M.factors):
        for index, factor in enumerate(M.factors):
            result = satisfies(factor, identity, vector_limit)
            if not result:
                return _lift(M, index, result)
        return SatisfactionResult(True)

    variables = identity.variables
    if len(M) ** len(variables) <= vector_limit:
        return _satisfies_vectorised(M, identity, variables)
    logger.debug(f"Searching {len(M)}^{len(variables)} substitutions for {identity} in {M.provenance}")
    return _satisfies_search(M, identity, variables)


def satisfies_all(M: FiniteMonoid, identities: Sequence[Identity], vector_limit: int = DEFAULT_VECTOR_LIMIT) -> Tuple[bool, Optional[Identity]]:
    """Check a list of identities; returns the first failing one."""
    for identity in identities:
        if not satisfies(M, identity, vector_limit):
            return False, identity
    return True, None
