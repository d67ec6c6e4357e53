"""
Decision procedures for the congruences on the free monoid.

Each relation is decided straight from its definition (island skeletons,
occurrence counts, adjacency of occurrences) without using the rewriting
systems, so the two implementations can be checked against each other.
"""
from dataclasses import dataclass
from enum import Enum
from itertools import product
from typing import Dict, List, Optional, Sequence, Set, Tuple
import re

from src.core.errors import NotationError, UnsupportedKindError
from src.core.words import Word, islands_of, letter_counts


class Tag(str, Enum):
    TRIVIAL = 'trivial'
    TAU1 = 'tau1'
    TAU_M = 'tau_m'
    GAMMA_K = 'gamma_k'
    GAMMA = 'gamma'
    LAMBDA = 'lambda'
    RHO = 'rho'
    TAU1_LAMBDA_K = 'tau1_lambda_k'
    TAU1_RHO_K = 'tau1_rho_k'
    MEET = 'meet'


_PARAMETRISED = {Tag.TAU_M: 1, Tag.GAMMA_K: 0, Tag.TAU1_LAMBDA_K: 1, Tag.TAU1_RHO_K: 1}
_ALIASES = {
    't0': Tag.TRIVIAL, 'trivial': Tag.TRIVIAL,
    't1': Tag.TAU1, 'tau1': Tag.TAU1,
    'gamma': Tag.GAMMA, 'lambda': Tag.LAMBDA, 'rho': Tag.RHO,
}
_CALL_PATTERN = re.compile(r'^([a-z0-9_]+)\((.*)\)$')


@dataclass(frozen=True)
class CongruenceKind:
    """
    Tagged choice of congruence.

    Parametrised tags carry `param` (m for tau_m, k for gamma_k and the
    adjacency meets); MEET carries its `members`.
    """

    tag: Tag
    param: Optional[int] = None
    members: Tuple['CongruenceKind', ...] = ()

    def __post_init__(self):
        if self.tag in _PARAMETRISED:
            minimum = _PARAMETRISED[self.tag]
            if self.param is None or self.param < minimum:
                raise ValueError(f"{self.tag.value} needs an integer parameter >= {minimum}, got {self.param}")
        elif self.param is not None:
            raise ValueError(f"{self.tag.value} takes no parameter")
        if self.tag is Tag.MEET and not self.members:
            raise ValueError("meet needs at least one member")
        if self.tag is not Tag.MEET and self.members:
            raise ValueError(f"{self.tag.value} takes no members")

    @classmethod
    def tau_m(cls, m: int) -> 'CongruenceKind':
        return cls(Tag.TAU_M, m)

    @classmethod
    def gamma_k(cls, k: int) -> 'CongruenceKind':
        return cls(Tag.GAMMA_K, k)

    @classmethod
    def tau1_lambda_k(cls, k: int) -> 'CongruenceKind':
        return cls(Tag.TAU1_LAMBDA_K, k)

    @classmethod
    def tau1_rho_k(cls, k: int) -> 'CongruenceKind':
        return cls(Tag.TAU1_RHO_K, k)

    @classmethod
    def meet(cls, *members: 'CongruenceKind') -> 'CongruenceKind':
        return cls(Tag.MEET, None, tuple(members))

    @classmethod
    def parse(cls, text: str) -> 'CongruenceKind':
        """
        Parse a kind name: t0, t1, gamma, lambda, rho, tau_m(2), gamma_k(1),
        tau1_lambda_k(2), tau1_rho_k(2) or meet(kind, kind, ...).

        Raises:
            NotationError: If the text names no known kind
        """
        cleaned = ''.join(text.split()).lower()
        if cleaned in _ALIASES:
            return cls(_ALIASES[cleaned])
        match = _CALL_PATTERN.match(cleaned)
        if match is None:
            raise NotationError(f"Unknown congruence kind: '{text}'")
        name, argument = match.groups()
        if name == Tag.MEET.value:
            return cls.meet(*(cls.parse(part) for part in _split_top_level(argument)))
        try:
            tag = Tag(name)
        except ValueError:
            raise NotationError(f"Unknown congruence kind: '{text}'") from None
        if tag not in _PARAMETRISED or not argument.isdigit():
            raise NotationError(f"Bad parameter for '{name}': '{argument}'")
        return cls(tag, int(argument))

    @property
    def rewritable(self) -> bool:
        """True for the kinds that have a rewriting system on the doubled alphabet."""
        return self.tag in (Tag.TAU1, Tag.GAMMA, Tag.LAMBDA, Tag.RHO)

    def __str__(self) -> str:
        if self.tag is Tag.MEET:
            return f"meet({','.join(str(m) for m in self.members)})"
        if self.param is not None:
            return f"{self.tag.value}({self.param})"
        return self.tag.value


TRIVIAL = CongruenceKind(Tag.TRIVIAL)
TAU1 = CongruenceKind(Tag.TAU1)
GAMMA = CongruenceKind(Tag.GAMMA)
LAMBDA = CongruenceKind(Tag.LAMBDA)
RHO = CongruenceKind(Tag.RHO)


def _split_top_level(text: str) -> List[str]:
    parts, depth, current = [], 0, ''
    for ch in text:
        if ch == '(':
            depth += 1
        elif ch == ')':
            depth -= 1
        if ch == ',' and depth == 0:
            parts.append(current)
            current = ''
        else:
            current += ch
    if current:
        parts.append(current)
    return parts


def _positions(letters: Sequence[int]) -> Dict[int, List[int]]:
    found: Dict[int, List[int]] = {}
    for i, x in enumerate(letters):
        found.setdefault(x, []).append(i)
    return found


def _adjacent(positions: List[int], i: int) -> bool:
    """Occurrences i and i+1 (1-based) exist and are adjacent."""
    return i < len(positions) and positions[i] == positions[i - 1] + 1


def _tau1(u: Tuple[int, ...], v: Tuple[int, ...]) -> bool:
    return islands_of(u).skeleton == islands_of(v).skeleton


def _multiple(letters: Sequence[int]) -> frozenset:
    return frozenset(x for x, n in letter_counts(letters).items() if n >= 2)


def _gamma(u: Tuple[int, ...], v: Tuple[int, ...]) -> bool:
    return _tau1(u, v) and _multiple(u) == _multiple(v)


def _first_two_adjacent(u: Tuple[int, ...], v: Tuple[int, ...]) -> bool:
    pu, pv = _positions(u), _positions(v)
    for x in _multiple(u):
        if _adjacent(pu[x], 1) != _adjacent(pv[x], 1):
            return False
    return True


def _adjacency_meet(u: Tuple[int, ...], v: Tuple[int, ...], k: int) -> bool:
    if not _tau1(u, v):
        return False
    pu, pv = _positions(u), _positions(v)
    for x in pu:
        for i in range(1, k + 1):
            if _adjacent(pu[x], i) != _adjacent(pv.get(x, []), i):
                return False
    return True


def _capped_counts(letters: Sequence[int], k: int) -> Dict[int, int]:
    return {x: min(n, k + 1) for x, n in letter_counts(letters).items()}


def related_letters(kind: CongruenceKind, u: Tuple[int, ...], v: Tuple[int, ...]) -> bool:
    """related() on raw letter tuples; used by the inner loops of the searches."""
    tag = kind.tag
    if tag is Tag.TRIVIAL:
        return u == v
    if tag is Tag.TAU1:
        return _tau1(u, v)
    if tag is Tag.TAU_M:
        iu, iv = islands_of(u), islands_of(v)
        if iu.skeleton != iv.skeleton:
            return False
        return all((p - q) % kind.param == 0 for p, q in zip(iu.exponents, iv.exponents))
    if tag is Tag.GAMMA_K:
        return _capped_counts(u, kind.param) == _capped_counts(v, kind.param)
    if tag is Tag.GAMMA:
        return _gamma(u, v)
    if tag is Tag.LAMBDA:
        return _gamma(u, v) and _first_two_adjacent(u, v)
    if tag is Tag.RHO:
        ru, rv = u[::-1], v[::-1]
        return _gamma(ru, rv) and _first_two_adjacent(ru, rv)
    if tag is Tag.TAU1_LAMBDA_K:
        return _adjacency_meet(u, v, kind.param)
    if tag is Tag.TAU1_RHO_K:
        return _adjacency_meet(u[::-1], v[::-1], kind.param)
    return all(related_letters(member, u, v) for member in kind.members)


def related(kind: CongruenceKind, u: Word, v: Word) -> bool:
    """
    Decide whether u and v are related by the congruence `kind`.

    Args:
        kind: Congruence to decide
        u: First word
        v: Second word over the same alphabet

    Returns:
        True iff u and v are kind-related

    Raises:
        ValueError: If the words use different alphabets
    """
    if u.alphabet != v.alphabet:
        raise ValueError("related() needs words over the same alphabet")
    return related_letters(kind, u.letters, v.letters)


def class_representatives(kind: CongruenceKind, u: Word) -> Set[Word]:
    """
    The K-set of u: all words in the class of u without a factor x^3.

    Every exponent pattern in {1, 2} over the island skeleton of u is tried
    and kept when it is related to u.

    Raises:
        UnsupportedKindError: For kinds other than gamma, lambda and rho
    """
    if kind.tag not in (Tag.GAMMA, Tag.LAMBDA, Tag.RHO):
        raise UnsupportedKindError(f"K-sets are defined for gamma, lambda and rho only, not {kind}")
    skeleton = islands_of(u.letters).skeleton
    found: Set[Word] = set()
    for exponents in product((1, 2), repeat=len(skeleton)):
        candidate: List[int] = []
        for letter, e in zip(skeleton, exponents):
            candidate.extend([letter] * e)
        letters = tuple(candidate)
        if related_letters(kind, letters, u.letters):
            found.add(Word(u.alphabet, letters))
    return found
