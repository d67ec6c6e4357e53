"""
Bounded searches over identities: tau-term checks, equational comparison of
two monoids and the gamma_k oracle.

Every search is exhaustive up to its bound and nothing beyond it; a positive
answer is corroboration, not proof.
"""
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple
import hashlib
import logging

import numpy as np

from src.core.congruence import TRIVIAL, CongruenceKind, related, related_letters
from src.core.errors import CapExceededError
from src.core.tau_order import TauWord, TauWordSet
from src.core.words import Alphabet, Word, enumerate_words
from src.identities.evaluation import (
    DEFAULT_VECTOR_LIMIT,
    extend_vector,
    satisfies,
    substitution_columns,
)
from src.identities.identity import Identity, enumerate_identities, variable_alphabet
from src.monoids.finite_monoid import FiniteMonoid
from src.monoids.rees import build

logger = logging.getLogger(__name__)

HOLDS = 'holds-up-to-bound'
COUNTEREXAMPLE = 'counterexample'


def _shortlex(letters: Tuple[int, ...]) -> Tuple[int, Tuple[int, ...]]:
    return len(letters), letters


@dataclass(frozen=True)
class TauTermVerdict:
    """Result of a bounded tau-term check of u."""

    status: str
    bound: int
    word: Word
    kind: CongruenceKind
    counterexample: Optional[Word] = None

    @property
    def holds(self) -> bool:
        return self.status == HOLDS

    def __bool__(self) -> bool:
        return self.holds

    def to_dict(self) -> dict:
        return {
            'word': self.word.power_notation(),
            'kind': str(self.kind),
            'status': self.status,
            'bound': self.bound,
            'counterexample': self.counterexample.power_notation() if self.counterexample else None,
        }

    def __str__(self) -> str:
        if self.holds:
            return f"{self.word.power_notation()}: holds up to length {self.bound} ({self.kind})"
        return (
            f"{self.word.power_notation()}: counterexample {self.counterexample.power_notation()} "
            f"(satisfied, not {self.kind}-related)"
        )


class _TauTermSearch:
    """Depth-first walk of the words over con(u), sharing prefix vectors."""

    def __init__(self, M: FiniteMonoid, kind: CongruenceKind, u: Word, maxlen: int):
        self.M = M
        self.kind = kind
        self.u = u.letters
        self.maxlen = maxlen
        self.letters = sorted(set(u.letters))
        self.columns = dict(zip(self.letters, substitution_columns(M, len(self.letters))))
        size = len(M) ** len(self.letters)
        self.empty = np.full(size, M.identity, dtype=M.array.dtype)
        self.target = self._vector(self.u)
        self.live = self.target != M.zero if M.zero is not None else None

    def _vector(self, letters: Sequence[int]) -> np.ndarray:
        vector = self.empty
        for x in letters:
            vector = extend_vector(self.M, vector, self.columns[x])
        return vector

    def _dead(self, vector: np.ndarray) -> bool:
        """Zero at a substitution where u is nonzero: no extension can match u."""
        return self.live is not None and bool(np.any(vector[self.live] == self.M.zero))

    def matches(self, letters: Tuple[int, ...], vector: np.ndarray) -> bool:
        return (
            np.array_equal(vector, self.target)
            and not related_letters(self.kind, self.u, letters)
        )

    def run(self, start: Tuple[int, ...]) -> Optional[Tuple[int, ...]]:
        best: Optional[Tuple[int, ...]] = None
        stack: List[Tuple[Tuple[int, ...], np.ndarray]] = [(start, self._vector(start))]
        while stack:
            letters, vector = stack.pop()
            if best is not None and len(letters) > len(best):
                continue
            if self.matches(letters, vector):
                if best is None or _shortlex(letters) < _shortlex(best):
                    best = letters
                continue
            if len(letters) == self.maxlen or self._dead(vector):
                continue
            for x in reversed(self.letters):
                stack.append((letters + (x,), extend_vector(self.M, vector, self.columns[x])))
        return best


def _least(found: Sequence[Optional[Tuple[int, ...]]]) -> Optional[Tuple[int, ...]]:
    candidates = [f for f in found if f is not None]
    return min(candidates, key=_shortlex) if candidates else None


def _tau_term_by_identities(M: FiniteMonoid, kind: CongruenceKind, u: Word, maxlen: int, vector_limit: int) -> Optional[Tuple[int, ...]]:
    for v in enumerate_words(u.alphabet, u.letters, maxlen):
        if related(kind, u, v):
            continue
        if satisfies(M, Identity(u, v), vector_limit):
            return v.letters
    return None


def is_tau_term_bounded(
    M: FiniteMonoid,
    kind: CongruenceKind,
    u: Word,
    maxlen: int,
    vector_limit: int = DEFAULT_VECTOR_LIMIT,
    jobs: int = 1,
) -> TauTermVerdict:
    """
    Look for an identity u ~ v satisfied by M with v not kind-related to u.

    Only words v over the letters of u with |v| <= maxlen are examined: any
    other letter can be replaced by the identity element. The least such v in
    shortlex order is reported.

    Args:
        M: Monoid with identity
        kind: Congruence u must determine
        u: Word to test
        maxlen: Length bound for v
        vector_limit: Largest substitution count handled with numpy vectors
        jobs: Worker threads, one shard per first letter

    Raises:
        ValueError: If maxlen is negative or M has no identity
    """
    if maxlen < 0:
        raise ValueError(f"maxlen must be non-negative, got {maxlen}")
    if M.identity is None:
        raise ValueError(f"{M.provenance} is not a monoid")

    letters = sorted(set(u.letters))
    if len(M) ** len(letters) > vector_limit:
        logger.info(f"Substitution space of {u} in {M.provenance} too large for vectors; checking identities one by one")
        found = _tau_term_by_identities(M, kind, u, maxlen, vector_limit)
    else:
        search = _TauTermSearch(M, kind, u, maxlen)
        if search.matches((), search.empty):
            found = ()
        elif maxlen == 0 or not letters:
            found = None
        elif jobs > 1:
            with ThreadPoolExecutor(max_workers=jobs) as pool:
                found = _least(list(pool.map(search.run, [(x,) for x in letters])))
        else:
            found = _least([search.run((x,)) for x in letters])

    if found is None:
        logger.debug(f"[OK] {u} is a {kind}-term for {M.provenance} up to length {maxlen}")
        return TauTermVerdict(HOLDS, maxlen, u, kind)
    return TauTermVerdict(COUNTEREXAMPLE, maxlen, u, kind, Word(u.alphabet, found))


def _digest(vector: np.ndarray) -> bytes:
    return hashlib.blake2b(np.ascontiguousarray(vector).tobytes(), digest_size=16).digest()


def term_digests(M: FiniteMonoid, nvars: int, maxlen: int, vector_limit: int = DEFAULT_VECTOR_LIMIT) -> Dict[Tuple[int, ...], bytes]:
    """
    Fingerprint of the term function of every word over nvars variables.

    Two words get equal fingerprints exactly when M satisfies the identity
    between them. Direct products are fingerprinted factor by factor.

    Raises:
        CapExceededError: If |M|^nvars exceeds vector_limit for a non-product monoid
    """
    if M.factors and all(f.identity is not None for f in M.factors):
        parts = [term_digests(f, nvars, maxlen, vector_limit) for f in M.factors]
        return {w: b''.join(part[w] for part in parts) for w in parts[0]}
    if M.identity is None:
        raise ValueError(f"{M.provenance} is not a monoid")
    if len(M) ** nvars > vector_limit:
        raise CapExceededError(
            f"{len(M)}^{nvars} substitutions in {M.provenance} exceed the vector limit {vector_limit}"
        )
    columns = substitution_columns(M, nvars)
    empty = np.full(len(M) ** nvars, M.identity, dtype=M.array.dtype)
    digests: Dict[Tuple[int, ...], bytes] = {}
    stack: List[Tuple[Tuple[int, ...], np.ndarray]] = [((), empty)]
    while stack:
        letters, vector = stack.pop()
        digests[letters] = _digest(vector)
        if len(letters) < maxlen:
            for x in range(nvars):
                stack.append((letters + (x,), extend_vector(M, vector, columns[x])))
    return digests


@dataclass(frozen=True)
class EquivalenceResult:
    equivalent: bool
    nvars: int
    maxlen: int
    separating: Optional[Identity] = None
    satisfied_by: Optional[str] = None

    def __bool__(self) -> bool:
        return self.equivalent

    def to_dict(self) -> dict:
        return {
            'equivalent': self.equivalent,
            'nvars': self.nvars,
            'maxlen': self.maxlen,
            'separating_identity': str(self.separating) if self.separating else None,
            'satisfied_by': self.satisfied_by,
        }


def equationally_equivalent_bounded(
    M1: FiniteMonoid,
    M2: FiniteMonoid,
    nvars: int,
    maxlen: int,
    vector_limit: int = DEFAULT_VECTOR_LIMIT,
) -> EquivalenceResult:
    """
    Compare the identities of M1 and M2 over nvars variables and sides of length <= maxlen.

    Each monoid partitions the words by term function; the partitions agree
    iff every word has the same least class member in both. The first word
    where they differ yields a separating identity.
    """
    alphabet = variable_alphabet(nvars)
    d1 = term_digests(M1, nvars, maxlen, vector_limit)
    d2 = term_digests(M2, nvars, maxlen, vector_limit)
    first1: Dict[bytes, Tuple[int, ...]] = {}
    first2: Dict[bytes, Tuple[int, ...]] = {}
    for w in sorted(d1, key=_shortlex):
        r1 = first1.setdefault(d1[w], w)
        r2 = first2.setdefault(d2[w], w)
        if r1 == r2:
            continue
        if _shortlex(r1) < _shortlex(r2):
            identity, side = Identity(Word(alphabet, r1), Word(alphabet, w)), M1.provenance
        else:
            identity, side = Identity(Word(alphabet, r2), Word(alphabet, w)), M2.provenance
        logger.info(f"{M1.provenance} and {M2.provenance} are separated by {identity}")
        return EquivalenceResult(False, nvars, maxlen, identity, side)
    logger.info(f"[OK] {M1.provenance} and {M2.provenance} agree on {len(d1)} words")
    return EquivalenceResult(True, nvars, maxlen)


@dataclass(frozen=True)
class OracleResult:
    passed: bool
    checked: int
    counterexample: Optional[Identity] = None

    def __bool__(self) -> bool:
        return self.passed


def cyclic_power_monoid(k: int) -> FiniteMonoid:
    """M(a^k), the Rees quotient of {a}* by the words longer than k."""
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    alphabet = Alphabet.of('a')
    word = TauWord.of_word(TRIVIAL, alphabet.word((0,) * k))
    return build(TRIVIAL, TauWordSet.of(TRIVIAL, [word]))


def gamma_k_oracle_check(k: int, nvars: int, maxlen: int) -> OracleResult:
    """
    Confirm that M(a^k) satisfies exactly the gamma_k-related identities in range.

    Identities are taken up to renaming and side swap.
    """
    M = cyclic_power_monoid(k)
    kind = CongruenceKind.gamma_k(k)
    digests = term_digests(M, nvars, maxlen)
    checked = 0
    for identity in enumerate_identities(nvars, maxlen):
        checked += 1
        satisfied = digests[identity.lhs.letters] == digests[identity.rhs.letters]
        if satisfied != related(kind, identity.lhs, identity.rhs):
            logger.warning(f"gamma_{k} oracle fails on {identity}")
            return OracleResult(False, checked, identity)
    logger.info(f"[OK] gamma_{k} oracle holds on {checked} identities")
    return OracleResult(True, checked)
